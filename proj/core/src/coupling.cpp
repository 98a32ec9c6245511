// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/coupling.hpp>

#include <spinent/errors.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace spinent {

namespace {

void check_scheme(const SpinSystem& system, CouplingScheme scheme) {
    if (system.size() != 2 && system.size() != 3) {
        throw ValidationError("coupling supports 2 or 3 particles, got " + std::to_string(system.size()));
    }
    if (scheme != default_scheme(system)) {
        throw ValidationError(system.size() == 2 ? "two particles couple with the pair-only scheme"
                                                 : "three particles couple with the pair-then-third scheme");
    }
}

// S from an eigenvalue S(S+1) of a squared spin operator.
HalfInt spin_from_square(double eigenvalue) {
    const double s = 0.5 * (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * eigenvalue)));
    const HalfInt h = HalfInt::from_double(std::round(2.0 * s) / 2.0);
    if (std::abs(h.value() * (h.value() + 1.0) - eigenvalue) > 1e-8) {
        throw ValidationError("eigenvalue " + std::to_string(eigenvalue) + " is not of the form S(S+1)");
    }
    return h;
}

std::vector<HalfInt> spin_range(HalfInt lo, HalfInt hi) {
    std::vector<HalfInt> out;
    for (HalfInt s = hi; s >= lo; s = s - HalfInt::integer(1)) out.push_back(s);
    return out;
}

// Multiplet key (S', S).
using MultipletKey = std::pair<int, int>;

MultipletKey key_of(const QuantumNumbers& q) {
    return {q.s_intermediate ? q.s_intermediate->twice() : -1, q.s_total.twice()};
}

}  // namespace

CouplingScheme default_scheme(const SpinSystem& system) {
    return system.size() == 3 ? CouplingScheme::pair_then_third : CouplingScheme::pair_only;
}

std::string QuantumNumbers::label() const {
    std::string out = "chi(";
    if (s_intermediate) out += s_intermediate->to_string() + ",";
    out += s_total.to_string() + "," + m_total.to_string() + ")";
    return out;
}

bool basis_order_less(const QuantumNumbers& a, const QuantumNumbers& b) {
    const int ai = a.s_intermediate ? a.s_intermediate->twice() : -1;
    const int bi = b.s_intermediate ? b.s_intermediate->twice() : -1;
    if (ai != bi) return ai > bi;
    if (a.s_total != b.s_total) return a.s_total > b.s_total;
    return a.m_total > b.m_total;
}

CVector ExactCoupledState::numeric(const SpinSystem& system) const {
    const Dims dims = dims_of(system);
    CVector v = CVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
    std::vector<std::size_t> digits(system.size());
    for (std::size_t t = 0; t < ms.size(); ++t) {
        for (std::size_t k = 0; k < system.size(); ++k) digits[k] = system[k].slot_of(ms[t][k]);
        v[static_cast<Eigen::Index>(flat_index(dims, digits))] = amplitudes[t].value();
    }
    return v;
}

std::vector<CoupledBasisState> coupled_eigenbasis(const SpinSystem& system, CouplingScheme scheme,
                                                  const Tolerances& tol) {
    check_scheme(system, scheme);
    const Dims dims = dims_of(system);
    const auto n = total_dimension(dims);
    const bool three = system.size() == 3;

    const TotalSpin total = total_spin(system);
    const std::vector<std::size_t> pair_sites{0, 1};
    const CMatrix pair_squared = three ? total_spin(system, pair_sites).squared.matrix() : CMatrix{};

    // S_z is diagonal in the product basis; bucket indices by 2M.
    std::map<int, std::vector<Eigen::Index>, std::greater<>> blocks;
    for (std::size_t flat = 0; flat < n; ++flat) {
        const auto digits = digits_of(dims, flat);
        int twice_m = 0;
        for (std::size_t k = 0; k < system.size(); ++k) twice_m += system[k].m_of_slot(digits[k]).twice();
        blocks[twice_m].push_back(static_cast<Eigen::Index>(flat));
    }

    std::map<MultipletKey, std::map<int, std::pair<QuantumNumbers, CVector>, std::greater<>>> multiplets;
    const CMatrix& s2 = total.squared.matrix();
    for (const auto& [twice_m, idx] : blocks) {
        const auto b = static_cast<Eigen::Index>(idx.size());
        CMatrix block(b, b);
        for (Eigen::Index r = 0; r < b; ++r)
            for (Eigen::Index c = 0; c < b; ++c) block(r, c) = s2(idx[r], idx[c]);
        const EigenSystem es = eigh(HermitianOperator({static_cast<std::size_t>(b)}, block, tol));

        // Eigenvalues are ascending; group equal S.
        Eigen::Index start = 0;
        while (start < b) {
            const HalfInt s_total = spin_from_square(es.values[start]);
            Eigen::Index end = start + 1;
            while (end < b && spin_from_square(es.values[end]) == s_total) ++end;
            CMatrix space = es.vectors.middleCols(start, end - start);

            std::vector<std::optional<HalfInt>> labels(static_cast<std::size_t>(space.cols()));
            if (three) {
                CMatrix pair_block(b, b);
                for (Eigen::Index r = 0; r < b; ++r)
                    for (Eigen::Index c = 0; c < b; ++c) pair_block(r, c) = pair_squared(idx[r], idx[c]);
                CMatrix projected = space.adjoint() * pair_block * space;
                projected = (0.5 * (projected + projected.adjoint())).eval();
                const EigenSystem inner =
                    eigh(HermitianOperator({static_cast<std::size_t>(projected.rows())}, projected, tol));
                space = (space * inner.vectors).eval();
                for (Eigen::Index c = 0; c < space.cols(); ++c) {
                    labels[static_cast<std::size_t>(c)] = spin_from_square(inner.values[c]);
                }
            }

            for (Eigen::Index c = 0; c < space.cols(); ++c) {
                CVector full = CVector::Zero(static_cast<Eigen::Index>(n));
                for (Eigen::Index r = 0; r < b; ++r) full[idx[r]] = space(r, c);
                QuantumNumbers q{labels[static_cast<std::size_t>(c)], s_total, HalfInt::from_twice(twice_m)};
                auto& slot = multiplets[key_of(q)];
                if (slot.count(twice_m)) {
                    throw ValidationError("degenerate coupled eigenspace for " + q.label());
                }
                slot.emplace(twice_m, std::make_pair(q, std::move(full)));
            }
            start = end;
        }
    }

    std::vector<CoupledBasisState> out;
    out.reserve(n);
    for (auto& [key, members] : multiplets) {
        CVector previous;
        for (auto& [twice_m, entry] : members) {
            CVector v = entry.second;
            if (previous.size() == 0) {
                v = phase_aligned(v);
            } else {
                const Complex overlap = v.dot(total.lowering * previous);
                if (std::abs(overlap) > 0.0) v *= std::conj(overlap) / std::abs(overlap);
            }
            previous = v;
            out.push_back({entry.first, StateVector::normalized(dims, v)});
        }
    }
    std::sort(out.begin(), out.end(), [](const CoupledBasisState& a, const CoupledBasisState& b) {
        return basis_order_less(a.quantum_numbers, b.quantum_numbers);
    });
    return out;
}

std::vector<ExactCoupledState> clebsch_gordan_basis_exact(const SpinSystem& system, CouplingScheme scheme) {
    check_scheme(system, scheme);
    const HalfInt one = HalfInt::integer(1);
    const HalfInt s1 = system[0].s(), s2 = system[1].s();
    std::vector<ExactCoupledState> out;

    if (system.size() == 2) {
        for (HalfInt s : spin_range(abs(s1 - s2), s1 + s2)) {
            for (HalfInt m = s; m >= -s; m = m - one) {
                ExactCoupledState state{{std::nullopt, s, m}, {}, {}};
                for (HalfInt m1 = s1; m1 >= -s1; m1 = m1 - one) {
                    const HalfInt m2 = m - m1;
                    const auto c = clebsch_gordan_exact(s1, m1, s2, m2, s, m);
                    if (c.is_zero()) continue;
                    state.ms.push_back({m1, m2});
                    state.amplitudes.push_back(c);
                }
                out.push_back(std::move(state));
            }
        }
    } else {
        const HalfInt s3 = system[2].s();
        for (HalfInt sp : spin_range(abs(s1 - s2), s1 + s2)) {
            for (HalfInt s : spin_range(abs(sp - s3), sp + s3)) {
                for (HalfInt m = s; m >= -s; m = m - one) {
                    ExactCoupledState state{{sp, s, m}, {}, {}};
                    for (HalfInt m1 = s1; m1 >= -s1; m1 = m1 - one) {
                        for (HalfInt m2 = s2; m2 >= -s2; m2 = m2 - one) {
                            const HalfInt m3 = m - m1 - m2;
                            const auto c = clebsch_gordan_exact(s1, m1, s2, m2, sp, m1 + m2) *
                                           clebsch_gordan_exact(sp, m1 + m2, s3, m3, s, m);
                            if (c.is_zero()) continue;
                            state.ms.push_back({m1, m2, m3});
                            state.amplitudes.push_back(c);
                        }
                    }
                    out.push_back(std::move(state));
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ExactCoupledState& a, const ExactCoupledState& b) {
        return basis_order_less(a.quantum_numbers, b.quantum_numbers);
    });
    return out;
}

std::vector<CoupledBasisState> clebsch_gordan_basis(const SpinSystem& system, CouplingScheme scheme) {
    const Dims dims = dims_of(system);
    std::vector<CoupledBasisState> out;
    for (const auto& exact : clebsch_gordan_basis_exact(system, scheme)) {
        out.push_back({exact.quantum_numbers, StateVector::normalized(dims, exact.numeric(system))});
    }
    return out;
}

double eigen_residual(const CoupledBasisState& state, const SpinSystem& system) {
    const auto& q = state.quantum_numbers;
    const CVector& v = state.vector.amplitudes();
    const TotalSpin total = total_spin(system);
    const double s = q.s_total.value();
    double worst = (total.squared.apply(v) - s * (s + 1.0) * v).cwiseAbs().maxCoeff();
    worst = std::max(worst, (total.z.apply(v) - q.m_total.value() * v).cwiseAbs().maxCoeff());
    if (q.s_intermediate) {
        const std::vector<std::size_t> pair{0, 1};
        const double sp = q.s_intermediate->value();
        const auto pair_spin = total_spin(system, pair);
        worst = std::max(worst, (pair_spin.squared.apply(v) - sp * (sp + 1.0) * v).cwiseAbs().maxCoeff());
    }
    return worst;
}

CMatrix basis_matrix(const std::vector<CoupledBasisState>& basis) {
    if (basis.empty()) return {};
    const auto n = static_cast<Eigen::Index>(basis.front().vector.size());
    CMatrix u(n, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) u.col(static_cast<Eigen::Index>(c)) = basis[c].vector.amplitudes();
    return u;
}

}  // namespace spinent
