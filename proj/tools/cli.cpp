// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <spinent/clebsch.hpp>
#include <spinent/coupling.hpp>
#include <spinent/entanglement.hpp>
#include <spinent/errata.hpp>
#include <spinent/errors.hpp>
#include <spinent/format.hpp>
#include <spinent/jc.hpp>
#include <spinent/listing.hpp>
#include <spinent/spatial.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace spinent::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Common {
    std::string out = ".";
    std::string format = "both";
    double tolerance = 0.0;  // 0 = subcommand default
    bool base2 = false;

    bool json_enabled() const { return format != "csv"; }
    bool csv_enabled() const { return format != "json"; }
    double tol_or(double fallback) const { return tolerance > 0.0 ? tolerance : fallback; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--out", c.out, "Output directory")->capture_default_str();
    sub->add_option("--format", c.format, "Artifact selector")
        ->check(CLI::IsMember({"json", "csv", "both"}))
        ->capture_default_str();
    sub->add_option("--tolerance", c.tolerance, "Cross-check tolerance override")->check(CLI::PositiveNumber);
    sub->add_flag("--base2", c.base2, "Report entropies in bits");
}

json common_json(const Common& c, double effective_tol) {
    return {{"format", c.format}, {"tolerance", effective_tol}, {"base2", c.base2}};
}

class Writer {
public:
    explicit Writer(const std::string& dir) : dir_(dir) { fs::create_directories(dir_); }

    void text(const std::string& name, const std::string& body) {
        std::ofstream f(dir_ / name, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + (dir_ / name).string());
        f << body;
    }
    void doc(const std::string& name, const json& j) { text(name, j.dump(2) + "\n"); }

private:
    fs::path dir_;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string join_ms(const std::vector<HalfInt>& ms) {
    std::string out;
    for (const auto& m : ms) out += (out.empty() ? "" : " ") + m.to_string();
    return out;
}

json qn_json(const QuantumNumbers& q) {
    return {{"label", q.label()},
            {"s_intermediate", q.s_intermediate ? json(q.s_intermediate->to_string()) : json(nullptr)},
            {"s_total", q.s_total.to_string()},
            {"m_total", q.m_total.to_string()}};
}

// ---------------------------------------------------------------- couple

struct CoupleArgs {
    std::string system;
};

int cmd_couple(const CoupleArgs& a, const Common& c, std::ostream& out) {
    const SpinSystem system = parse_system(a.system);
    if (system.size() != 2 && system.size() != 3) throw ValidationError("couple supports 2 or 3 particles");
    const double tol = c.tol_or(1e-10);
    const auto scheme = default_scheme(system);
    const auto computed = coupled_eigenbasis(system, scheme);
    const auto exact = clebsch_gordan_basis_exact(system, scheme);

    double worst_residual = 0.0, worst_cg = 0.0;
    json rows = json::array();
    std::ostringstream csv;
    csv << "state,s_intermediate,s_total,m_total,ms,exact,value\n";
    for (const auto& state : computed) {
        worst_residual = std::max(worst_residual, eigen_residual(state, system));
        const auto* match = [&]() -> const ExactCoupledState* {
            for (const auto& e : exact)
                if (e.quantum_numbers == state.quantum_numbers) return &e;
            return nullptr;
        }();
        if (!match) throw std::logic_error("Clebsch-Gordan basis lacks " + state.quantum_numbers.label());
        worst_cg = std::max(worst_cg, distance_up_to_phase(state.vector.amplitudes(), match->numeric(system)));

        const auto& q = state.quantum_numbers;
        json terms = json::array();
        for (std::size_t k = 0; k < match->ms.size(); ++k) {
            const auto& amp = match->amplitudes[k];
            terms.push_back({{"ms", join_ms(match->ms[k])}, {"exact", amp.to_string()}, {"value", amp.value()}});
            csv << q.label() << ',' << (q.s_intermediate ? q.s_intermediate->to_string() : "") << ','
                << q.s_total.to_string() << ',' << q.m_total.to_string() << ',' << join_ms(match->ms[k]) << ','
                << amp.to_string() << ',' << format_double(amp.value()) << '\n';
        }
        json row = qn_json(q);
        row["terms"] = std::move(terms);
        rows.push_back(std::move(row));
    }

    const bool ok = worst_residual <= tol && worst_cg <= tol;
    Writer w(c.out);
    json summary = {{"states", computed.size()},
                    {"max_eigen_residual", worst_residual},
                    {"max_cg_vs_diagonalization", worst_cg},
                    {"cross_check_passed", ok}};

    const ListingSet* listings = builtin_listing_set(system);
    if (listings) {
        const auto report = match_paper_listing(system, computed, *listings, Tolerances{tol, 1e-12});
        if (c.json_enabled()) w.doc("errata.json", to_json(report));
        w.text("errata.txt", to_text(report));
        json counts;
        for (auto v : {ErrataVerdict::exact_match, ErrataVerdict::global_phase_match, ErrataVerdict::normalization_defect,
                       ErrataVerdict::amplitude_mismatch, ErrataVerdict::unmatched, ErrataVerdict::paper_missing}) {
            counts[to_string(v)] = report.count(v);
        }
        summary["errata"] = counts;
    }
    if (c.json_enabled()) w.doc("basis.json", {{"system", system_label(system)}, {"states", rows}});
    if (c.csv_enabled()) w.text("basis.csv", csv.str());
    w.doc("run.json", {{"subcommand", "couple"},
                       {"config", {{"system", system_label(system)}, {"common", common_json(c, tol)}}},
                       {"summary", summary}});

    out << "couple " << system_label(system) << ": " << computed.size() << " states, residual "
        << format_double(worst_residual) << ", cg deviation " << format_double(worst_cg)
        << (listings ? ", errata written" : "") << '\n';
    return ok ? kOk : kCrossCheckFailed;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    std::string listing;
    std::string state_file;
    std::string system;
};

int cmd_classify(const ClassifyArgs& a, const Common& c, std::ostream& out) {
    const double threshold = c.tol_or(kPurityThreshold);
    std::optional<StateVector> state;
    std::optional<PaperVerdict> verdict;
    json source;
    if (!a.listing.empty()) {
        const auto ref = find_builtin_listing(a.listing);
        if (!ref) throw ValidationError("unknown listing id '" + a.listing + "'");
        state = ref->listing->state(ref->set->system);
        verdict = ref->set->verdict(a.listing);
        source = {{"listing", a.listing},
                  {"system", system_label(ref->set->system)},
                  {"quantum_numbers", qn_json(ref->listing->quantum_numbers)},
                  {"listed_norm_squared", ref->listing->norm_squared()}};
    } else {
        std::optional<SpinSystem> fallback;
        if (!a.system.empty()) fallback = parse_system(a.system);
        state = parse_amplitude_file(read_file(a.state_file), fallback ? &*fallback : nullptr);
        source = {{"amplitude_file", fs::path(a.state_file).filename().string()}};
    }

    const auto report = separability_report(*state, verdict, threshold);
    Writer w(c.out);
    json doc = to_json(report, c.base2);
    doc["source"] = source;
    if (c.json_enabled()) w.doc("classify.json", doc);
    if (c.csv_enabled()) {
        const double scale = c.base2 ? 1.0 / std::log(2.0) : 1.0;
        std::ostringstream csv;
        csv << "particle,purity,entropy\n";
        for (std::size_t k = 0; k < report.purity.size(); ++k) {
            csv << k + 1 << ',' << format_double(report.purity[k]) << ',' << format_double(report.entropy[k] * scale)
                << '\n';
        }
        w.text("classify.csv", csv.str());
    }
    w.doc("run.json", {{"subcommand", "classify"},
                       {"config", {{"source", source}, {"purity_threshold", threshold}, {"common", common_json(c, threshold)}}},
                       {"summary", {{"entangled", report.genuinely_multiparticle_entangled}}}});

    out << "classify " << (a.listing.empty() ? a.state_file : a.listing) << ": "
        << (report.genuinely_multiparticle_entangled ? "entangled" : "not entangled");
    if (report.paper_label_agreement) out << (*report.paper_label_agreement ? " (agrees with label)" : " (disagrees with label)");
    out << '\n';
    return kOk;  // label disagreement is a finding, not a failure
}

// ---------------------------------------------------------------- jc

struct JcArgs {
    double omega = 1.0, omega0 = 2.0, g = 0.1;
    int n = 0;
    double t_max = 0.0;  // 0 = 20/g (or 20 when g = 0)
    std::size_t points = 201;
    double step = 0.0;
    std::string convention = "schrodinger";
};

int cmd_jc(const JcArgs& a, const Common& c, std::ostream& out) {
    const JCParams p(a.omega, a.omega0, a.g, a.n);
    const double tol = c.tol_or(1e-7);
    const double t_max = a.t_max > 0.0 ? a.t_max : (a.g != 0.0 ? 20.0 / std::abs(a.g) : 20.0);
    if (a.step < 0.0 || !std::isfinite(a.step)) throw ValidationError("--step must be >= 0");
    const double step = a.step > 0.0 ? a.step : default_step(p);
    if (step > default_step(p) * (1.0 + 1e-12)) {
        throw ValidationError("--step " + format_double(step) + " exceeds the stable bound " +
                              format_double(default_step(p)));
    }
    const auto times = uniform_grid(0.0, t_max, a.points);
    const auto convention = a.convention == "as_printed" ? PhaseConvention::as_printed : PhaseConvention::schrodinger;

    const auto numeric = evolve_numeric(p, times, step);
    const auto exact = analytic_trajectory(p, times, PhaseConvention::schrodinger);
    const auto reported = analytic_trajectory(p, times, convention);
    const double deviation = max_phase_adjusted_deviation(numeric, exact);
    double norm_error = 0.0, max_p2 = 0.0, max_entropy = 0.0;
    for (std::size_t k = 0; k < reported.size(); ++k) {
        norm_error = std::max(norm_error, std::abs(std::norm(numeric.c1[k]) + std::norm(numeric.c2[k]) - 1.0));
        max_p2 = std::max(max_p2, std::norm(reported.c2[k]));
        max_entropy = std::max(max_entropy, reported.entropy[k]);
    }
    const bool ok = deviation <= tol;

    Writer w(c.out);
    if (c.csv_enabled()) w.text("jc.csv", to_csv(reported));
    const json summary = {{"max_phase_adjusted_deviation", deviation},
                          {"max_norm_error", norm_error},
                          {"max_p2", max_p2},
                          {"max_entropy", max_entropy * (c.base2 ? 1.0 / std::log(2.0) : 1.0)},
                          {"detuning_law", p.generalized_rabi() > 0.0
                                               ? p.rabi() * p.rabi() / (p.generalized_rabi() * p.generalized_rabi())
                                               : 0.0},
                          {"cross_check_passed", ok}};
    const json config = {{"omega", a.omega},   {"omega0", a.omega0},         {"g", a.g},
                         {"n", a.n},           {"t_max", t_max},             {"points", a.points},
                         {"step", step},       {"convention", a.convention}, {"delta", p.delta()},
                         {"rabi", p.rabi()},   {"common", common_json(c, tol)}};
    if (c.json_enabled()) {
        json samples = json::array();
        for (std::size_t k = 0; k < reported.size(); ++k) {
            samples.push_back({reported.times[k], reported.c1[k].real(), reported.c1[k].imag(), reported.c2[k].real(),
                               reported.c2[k].imag(), reported.entropy[k]});
        }
        w.doc("jc.json", {{"columns", {"t", "re_c1", "im_c1", "re_c2", "im_c2", "entropy"}}, {"samples", samples}});
    }
    w.doc("run.json", {{"subcommand", "jc"}, {"config", config}, {"summary", summary}});

    out << "jc: " << reported.size() << " samples, analytic vs RK4 " << format_double(deviation)
        << (ok ? " (ok)" : " (FAILED, tolerance " + format_double(tol) + ")") << '\n';
    return ok ? kOk : kCrossCheckFailed;
}

// ---------------------------------------------------------------- spatial

struct SpatialArgs {
    double sigma = 1.0;
    std::vector<double> d{0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 8.0};
    std::size_t points = 128;
    double half_width = 10.0;
    std::string system = "e,e";
    std::string spin = "eq15";
    std::string symmetry = "symmetric";
};

CoupledBasisState select_spin_state(const SpinSystem& system, const std::string& spec) {
    QuantumNumbers want;
    if (const auto ref = find_builtin_listing(spec)) {
        if (system_label(ref->set->system) != system_label(system)) {
            throw ValidationError("listing " + spec + " belongs to system " + system_label(ref->set->system));
        }
        want = ref->listing->quantum_numbers;
    } else {
        const auto comma = spec.find(',');
        if (comma == std::string::npos) throw ValidationError("--spin expects a listing id or 'S,M', got '" + spec + "'");
        want.s_total = HalfInt::parse(spec.substr(0, comma));
        want.m_total = HalfInt::parse(spec.substr(comma + 1));
    }
    // The computed eigenstate stands in for the listing so that errata never leak into the scan.
    for (auto& s : coupled_eigenbasis(system, default_scheme(system)))
        if (s.quantum_numbers == want) return s;
    throw ValidationError("no coupled state " + want.label() + " for system " + system_label(system));
}

int cmd_spatial(const SpatialArgs& a, const Common& c, std::ostream& out) {
    const SpinSystem system = parse_system(a.system);
    if (system.size() != 2 || !(system[0].s() == system[1].s())) {
        throw ValidationError("spatial scan needs two identical particles");
    }
    ScanConfig config{GridSpec(a.half_width, a.points), a.sigma, parse_exchange(a.symmetry)};
    const CoupledBasisState spin = select_spin_state(system, a.spin);
    const double tol = c.tol_or(1e-10);
    const auto rows = separation_scan(config, spin, a.d);

    double worst_exchange = 0.0, worst_closed_form = 0.0;
    for (const auto& r : rows) {
        worst_exchange = std::max(worst_exchange, r.exchange_deviation);
        worst_closed_form = std::max(
            worst_closed_form, std::abs(r.overlap_abs - std::exp(-r.separation * r.separation / (8.0 * a.sigma * a.sigma))));
    }
    const bool ok = worst_exchange <= tol;

    Writer w(c.out);
    if (c.csv_enabled()) w.text("spatial.csv", scan_to_csv(rows));
    json meta = scan_metadata(config, spin, rows);
    meta["max_overlap_closed_form_deviation"] = worst_closed_form;
    if (c.base2) meta["entropy"] = "von Neumann entropy (nats) of one particle's (grid, spin) factor; --base2 affects the sidecar only";
    if (c.json_enabled()) {
        json j = json::array();
        for (const auto& r : rows) j.push_back({{"d", r.separation}, {"overlap_abs", r.overlap_abs}, {"entropy", r.entropy}});
        meta["rows_data"] = j;
    }
    w.doc("spatial.json", meta);
    w.doc("run.json", {{"subcommand", "spatial"},
                       {"config",
                        {{"sigma", a.sigma},
                         {"d", a.d},
                         {"points", a.points},
                         {"half_width", a.half_width},
                         {"system", system_label(system)},
                         {"spin", a.spin},
                         {"symmetry", a.symmetry},
                         {"common", common_json(c, tol)}}},
                       {"summary", {{"max_exchange_deviation", worst_exchange}, {"cross_check_passed", ok}}}});

    out << "spatial: " << rows.size() << " rows, exchange deviation " << format_double(worst_exchange)
        << (ok ? "" : " (FAILED)") << '\n';
    return ok ? kOk : kCrossCheckFailed;
}

// ---------------------------------------------------------------- cg-table

struct CgArgs {
    std::string j1 = "1/2", j2 = "1/2";
};

int cmd_cg(const CgArgs& a, const Common& c, std::ostream& out) {
    const HalfInt j1 = HalfInt::parse(a.j1), j2 = HalfInt::parse(a.j2);
    if (j1 < HalfInt::integer(0) || j2 < HalfInt::integer(0)) throw ValidationError("j must be non-negative");
    const double tol = c.tol_or(1e-12);

    // Rows (J, M) against columns (m1, m2): must be orthogonal.
    const int n1 = j1.twice() + 1, n2 = j2.twice() + 1;
    CMatrix u = CMatrix::Zero(n1 * n2, n1 * n2);
    std::ostringstream csv;
    csv << "j1,m1,j2,m2,J,M,exact,value\n";
    json entries = json::array();
    int row = 0;
    for (HalfInt J = j1 + j2; J >= abs(j1 - j2); J = J - HalfInt::integer(1)) {
        for (HalfInt M = J; M >= -J; M = M - HalfInt::integer(1), ++row) {
            for (int a1 = 0; a1 < n1; ++a1) {
                const HalfInt m1 = j1 - HalfInt::integer(a1);
                const HalfInt m2 = M - m1;
                if (abs(m2) > j2 || !(m2 - j2).is_integer()) continue;
                const auto cg = clebsch_gordan_exact(j1, m1, j2, m2, J, M);
                if (cg.is_zero()) continue;
                const int a2 = (j2 - m2).twice() / 2;
                u(row, a1 * n2 + a2) = cg.value();
                csv << j1.to_string() << ',' << m1.to_string() << ',' << j2.to_string() << ',' << m2.to_string() << ','
                    << J.to_string() << ',' << M.to_string() << ',' << cg.to_string() << ',' << format_double(cg.value())
                    << '\n';
                entries.push_back({{"m1", m1.to_string()},
                                   {"m2", m2.to_string()},
                                   {"J", J.to_string()},
                                   {"M", M.to_string()},
                                   {"exact", cg.to_string()},
                                   {"value", cg.value()}});
            }
        }
    }
    const double orth = (u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    const bool ok = orth <= tol;

    Writer w(c.out);
    if (c.csv_enabled()) w.text("cg.csv", csv.str());
    if (c.json_enabled()) w.doc("cg.json", {{"j1", j1.to_string()}, {"j2", j2.to_string()}, {"coefficients", entries}});
    w.doc("run.json", {{"subcommand", "cg-table"},
                       {"config", {{"j1", j1.to_string()}, {"j2", j2.to_string()}, {"common", common_json(c, tol)}}},
                       {"summary", {{"nonzero", entries.size()}, {"orthogonality_error", orth}, {"cross_check_passed", ok}}}});
    out << "cg-table " << j1.to_string() << " x " << j2.to_string() << ": " << entries.size()
        << " nonzero coefficients, orthogonality error " << format_double(orth) << '\n';
    return ok ? kOk : kCrossCheckFailed;
}

}  // namespace

StateVector parse_amplitude_file(std::string_view text, const SpinSystem* fallback) {
    std::optional<SpinSystem> system;
    if (fallback) system = *fallback;
    std::vector<std::pair<std::vector<HalfInt>, Complex>> terms;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
        if (line.rfind("#! system", 0) == 0) {
            std::istringstream d(line.substr(9));
            std::string spec;
            d >> spec;
            system = parse_system(spec);
            continue;
        }
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto bar = line.find('|');
        if (bar == std::string::npos) throw ValidationError(where() + "expected 'm1 m2 [m3] | re [im]'");
        std::istringstream lhs(line.substr(0, bar)), rhs(line.substr(bar + 1));
        std::vector<HalfInt> ms;
        for (std::string tok; lhs >> tok;) ms.push_back(HalfInt::parse(tok));
        double re = 0.0, im = 0.0;
        if (!(rhs >> re)) throw ValidationError(where() + "missing amplitude");
        rhs >> im;
        terms.emplace_back(std::move(ms), Complex{re, im});
    }
    if (!system) throw ValidationError("amplitude file has no '#! system' directive and no --system was given");
    const Dims dims = dims_of(*system);
    CVector v = CVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
    for (const auto& [ms, amp] : terms) {
        if (ms.size() != system->size()) throw ValidationError("term has " + std::to_string(ms.size()) + " m values");
        std::vector<std::size_t> digits;
        for (std::size_t k = 0; k < ms.size(); ++k) digits.push_back((*system)[k].slot_of(ms[k]));
        v[static_cast<Eigen::Index>(flat_index(dims, digits))] += amp;
    }
    if (v.norm() == 0.0) throw ValidationError("amplitude file describes the zero vector");
    return StateVector::normalized(dims, v);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spin coupling and entanglement toolkit"};
    app.require_subcommand(1);

    Common common;

    CoupleArgs couple;
    auto* sub_couple = app.add_subcommand("couple", "Coupled basis table and errata report");
    sub_couple->add_option("system", couple.system, "e,e | e,e,e | p,p | p,p,p")->required();
    add_common(sub_couple, common);

    ClassifyArgs classify;
    auto* sub_classify = app.add_subcommand("classify", "Separability report for a listing or amplitude file");
    auto* opt_listing = sub_classify->add_option("--listing", classify.listing, "Built-in listing id, e.g. eq14");
    auto* opt_state = sub_classify->add_option("--state", classify.state_file, "Amplitude file")->check(CLI::ExistingFile);
    opt_listing->excludes(opt_state);
    sub_classify->add_option("--system", classify.system, "System for amplitude files without a directive");
    add_common(sub_classify, common);

    JcArgs jc;
    auto* sub_jc = app.add_subcommand("jc", "Two-photon Jaynes-Cummings trajectory");
    sub_jc->add_option("--omega", jc.omega)->capture_default_str();
    sub_jc->add_option("--omega0", jc.omega0)->capture_default_str();
    sub_jc->add_option("--g", jc.g)->capture_default_str();
    sub_jc->add_option("--n", jc.n)->check(CLI::NonNegativeNumber)->capture_default_str();
    sub_jc->add_option("--t-max", jc.t_max, "End time (default 20/g)")->check(CLI::PositiveNumber);
    sub_jc->add_option("--points", jc.points)->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))->capture_default_str();
    sub_jc->add_option("--step", jc.step, "RK4 step (default 0.01/max(w1,|delta|,w,1))");
    sub_jc->add_option("--convention", jc.convention)
        ->check(CLI::IsMember({"schrodinger", "as_printed"}))
        ->capture_default_str();
    add_common(sub_jc, common);

    SpatialArgs spatial;
    auto* sub_spatial = app.add_subcommand("spatial", "Entropy and overlap versus packet separation");
    sub_spatial->add_option("--sigma", spatial.sigma)->check(CLI::PositiveNumber)->capture_default_str();
    sub_spatial->add_option("--d", spatial.d, "Separations, comma separated")->delimiter(',');
    sub_spatial->add_option("--N", spatial.points, "Grid points")->capture_default_str();
    sub_spatial->add_option("--L", spatial.half_width, "Grid half-width")->capture_default_str();
    sub_spatial->add_option("--system", spatial.system)->capture_default_str();
    sub_spatial->add_option("--spin", spatial.spin, "Listing id or 'S,M'")->capture_default_str();
    sub_spatial->add_option("--symmetry", spatial.symmetry, "Spatial exchange symmetry")
        ->check(CLI::IsMember({"symmetric", "antisymmetric"}))
        ->capture_default_str();
    add_common(sub_spatial, common);

    CgArgs cg;
    auto* sub_cg = app.add_subcommand("cg-table", "Clebsch-Gordan table for j1 x j2");
    sub_cg->add_option("--j1", cg.j1)->capture_default_str();
    sub_cg->add_option("--j2", cg.j2)->capture_default_str();
    add_common(sub_cg, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*sub_couple) return cmd_couple(couple, common, out);
        if (*sub_classify) {
            if (classify.listing.empty() && classify.state_file.empty()) {
                throw ValidationError("classify needs --listing or --state");
            }
            return cmd_classify(classify, common, out);
        }
        if (*sub_jc) return cmd_jc(jc, common, out);
        if (*sub_spatial) return cmd_spatial(spatial, common, out);
        if (*sub_cg) return cmd_cg(cg, common, out);
    } catch (const std::invalid_argument& e) {  // ValidationError and friends
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace spinent::cli
