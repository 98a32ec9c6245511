// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/entanglement.hpp>

#include <spinent/errors.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace spinent {

std::size_t SchmidtDecomposition::rank(double threshold) const {
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < coefficients.size(); ++k) r += coefficients[k] * coefficients[k] > threshold;
    return r;
}

CVector SchmidtDecomposition::reconstruct() const {
    CVector out = CVector::Zero(left.rows() * right.rows());
    for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
        out += coefficients[k] * kron(CMatrix(left.col(k)), CMatrix(right.col(k)));
    }
    return out;
}

SchmidtDecomposition schmidt(const StateVector& state, std::span<const std::size_t> part_a) {
    const std::size_t n = state.subsystems();
    std::vector<std::size_t> a(part_a.begin(), part_a.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty() || a.size() >= n || a.back() >= n) {
        throw ValidationError("Schmidt decomposition needs a proper, nonempty bipartition");
    }
    std::vector<std::size_t> perm = a;
    for (std::size_t k = 0; k < n; ++k)
        if (!std::binary_search(a.begin(), a.end(), k)) perm.push_back(k);
    const StateVector ordered = permute_subsystems(state, perm);

    SchmidtDecomposition out;
    std::size_t da = 1, db = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.size()) {
            out.left_dims.push_back(ordered.dims()[i]);
            da *= ordered.dims()[i];
        } else {
            out.right_dims.push_back(ordered.dims()[i]);
            db *= ordered.dims()[i];
        }
    }
    // Row-major reshape: flat = a * db + b.
    CMatrix m(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ordered[i * db + j];

    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.coefficients = svd.singularValues();
    out.left = svd.matrixU();
    out.right = svd.matrixV().conjugate();
    return out;
}

double entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    if (ev.size() && ev.minCoeff() < -1e-10) throw ValidationError("density matrix has a negative eigenvalue");
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev[i] >= 1e-14) s -= ev[i] * std::log(ev[i]);
    return std::max(0.0, s);
}

double shannon_entropy(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities)
        if (p >= 1e-14) s -= p * std::log(p);
    return std::max(0.0, s);
}

bool EntanglementReport::separable(std::size_t particle) const {
    return std::find(separable_particles.begin(), separable_particles.end(), particle) != separable_particles.end();
}

EntanglementReport separability_report(const StateVector& state, std::optional<PaperVerdict> verdict,
                                       double threshold) {
    const std::size_t n = state.subsystems();
    if (n != 2 && n != 3) throw ValidationError("separability report supports 2 or 3 particles");

    EntanglementReport report;
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<std::size_t> part{k};
        const auto sd = schmidt(state, part);
        BipartitionData b;
        b.part_a = part;
        std::vector<double> probs;
        for (Eigen::Index i = 0; i < sd.coefficients.size(); ++i) {
            b.schmidt_coefficients.push_back(sd.coefficients[i]);
            probs.push_back(sd.coefficients[i] * sd.coefficients[i]);
        }
        b.entropy = shannon_entropy(probs);
        double purity = 0.0;
        for (double p : probs) purity += p * p;
        report.purity.push_back(purity);
        report.entropy.push_back(b.entropy);
        if (purity >= 1.0 - threshold) report.separable_particles.push_back(k);
        report.bipartitions.push_back(std::move(b));
        if (n == 2) break;  // the single cut 1|2 covers both particles
    }
    if (n == 2) {
        report.purity.push_back(report.purity[0]);
        report.entropy.push_back(report.entropy[0]);
        if (!report.separable_particles.empty()) report.separable_particles.push_back(1);
    }
    report.genuinely_multiparticle_entangled = report.separable_particles.empty();

    if (n == 3) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                const std::size_t rest = 3 - i - j;
                PairData p{i, j, report.separable(rest), std::nullopt, std::nullopt};
                if (p.pure) {
                    // With the third particle factored out, the pair entanglement is
                    // the single-particle entropy of either member.
                    p.entropy = report.entropy[i];
                    p.entangled = report.purity[i] < 1.0 - threshold;
                }
                report.pairs.push_back(p);
            }
        }
    }

    report.paper_verdict = verdict;
    if (verdict == PaperVerdict::entangled) report.paper_label_agreement = report.genuinely_multiparticle_entangled;
    else if (verdict == PaperVerdict::not_entangled)
        report.paper_label_agreement = !report.genuinely_multiparticle_entangled;
    return report;
}

nlohmann::json to_json(const EntanglementReport& report, bool log_base2) {
    const double scale = log_base2 ? 1.0 / std::log(2.0) : 1.0;
    auto one_based = [](const std::vector<std::size_t>& v) {
        std::vector<std::size_t> out;
        for (auto x : v) out.push_back(x + 1);
        return out;
    };
    nlohmann::json entropies = nlohmann::json::array();
    for (double e : report.entropy) entropies.push_back(e * scale);
    nlohmann::json bip = nlohmann::json::array();
    for (const auto& b : report.bipartitions) {
        bip.push_back({{"part_a", one_based(b.part_a)},
                       {"schmidt_coefficients", b.schmidt_coefficients},
                       {"entropy", b.entropy * scale}});
    }
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : report.pairs) {
        pairs.push_back({{"pair", {p.first + 1, p.second + 1}},
                         {"pure", p.pure},
                         {"entangled", p.entangled ? nlohmann::json(*p.entangled) : nlohmann::json(nullptr)},
                         {"entropy", p.entropy ? nlohmann::json(*p.entropy * scale) : nlohmann::json(nullptr)}});
    }
    return {
        {"purity", report.purity},
        {"entropy", entropies},
        {"entropy_unit", log_base2 ? "bits" : "nats"},
        {"bipartitions", bip},
        {"separable_particles", one_based(report.separable_particles)},
        {"genuinely_multiparticle_entangled", report.genuinely_multiparticle_entangled},
        {"entangled", report.genuinely_multiparticle_entangled},
        {"pairs", pairs},
        {"paper_verdict", report.paper_verdict ? nlohmann::json(to_string(*report.paper_verdict)) : nlohmann::json(nullptr)},
        {"paper_label_agreement",
         report.paper_label_agreement ? nlohmann::json(*report.paper_label_agreement) : nlohmann::json(nullptr)},
    };
}

}  // namespace spinent
