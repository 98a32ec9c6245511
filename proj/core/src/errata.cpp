// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/errata.hpp>

#include <spinent/errors.hpp>
#include <spinent/format.hpp>

#include <cmath>
#include <sstream>

namespace spinent {

namespace {

std::string ms_string(const std::vector<HalfInt>& ms) {
    std::string out = "(";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ",";
        out += ms[i].to_string();
    }
    return out + ")";
}

std::vector<HalfInt> ms_of_index(const SpinSystem& system, std::size_t flat) {
    const auto digits = digits_of(dims_of(system), flat);
    std::vector<HalfInt> ms;
    for (std::size_t k = 0; k < system.size(); ++k) ms.push_back(system[k].m_of_slot(digits[k]));
    return ms;
}

std::vector<std::string> term_notes(const SpinSystem& system, const PaperListing& listing, const CVector& raw,
                                    const CVector& oracle) {
    std::vector<std::string> notes;
    for (const auto& t : listing.terms) {
        HalfInt sum;
        for (auto m : t.ms) sum = sum + m;
        if (sum != listing.quantum_numbers.m_total) {
            notes.push_back("term " + ms_string(t.ms) + " has total m " + sum.to_string() + ", listing states M_s " +
                            listing.quantum_numbers.m_total.to_string());
        }
    }
    constexpr double kZero = 1e-12;
    for (Eigen::Index i = 0; i < raw.size(); ++i) {
        const bool listed = std::abs(raw[i]) > kZero;
        const bool expected = std::abs(oracle[i]) > kZero;
        if (expected && !listed) {
            notes.push_back("missing term " + ms_string(ms_of_index(system, static_cast<std::size_t>(i))));
        } else if (listed && !expected) {
            notes.push_back("extra term " + ms_string(ms_of_index(system, static_cast<std::size_t>(i))));
        }
    }
    return notes;
}

IdentityCheck check(std::string id, std::string statement, const CMatrix& lhs, const CMatrix& rhs,
                    std::string note = {}) {
    const double dev = (lhs - rhs).cwiseAbs().maxCoeff();
    return {std::move(id), std::move(statement), dev, dev <= 1e-10, std::move(note)};
}

}  // namespace

std::string to_string(ErrataVerdict v) {
    switch (v) {
        case ErrataVerdict::exact_match: return "exact-match";
        case ErrataVerdict::global_phase_match: return "global-phase-match";
        case ErrataVerdict::normalization_defect: return "normalization-defect";
        case ErrataVerdict::amplitude_mismatch: return "amplitude-mismatch";
        case ErrataVerdict::unmatched: return "unmatched";
        case ErrataVerdict::paper_missing: return "paper-missing";
    }
    return "unknown";
}

bool direction_consistent(ErrataVerdict v) {
    return v == ErrataVerdict::exact_match || v == ErrataVerdict::global_phase_match ||
           v == ErrataVerdict::normalization_defect;
}

std::size_t ErrataReport::count(ErrataVerdict v) const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.verdict == v;
    return n;
}

const ErrataEntry* ErrataReport::find(const std::string& listing_id) const {
    for (const auto& e : entries)
        if (e.listing_id == listing_id) return &e;
    return nullptr;
}

ErrataReport match_paper_listing(const SpinSystem& system, const std::vector<CoupledBasisState>& computed,
                                 const ListingSet& listings, const Tolerances& tol) {
    if (!(listings.system == system)) throw ValidationError("listing set belongs to a different particle system");
    const auto oracle = clebsch_gordan_basis_exact(system, default_scheme(system));

    ErrataReport report;
    report.system = system_label(system);
    report.listing_set = listings.name;
    report.identities = hamiltonian_identity_checks(system);

    std::vector<bool> covered(computed.size(), false);
    for (const auto& listing : listings.listings) {
        ErrataEntry entry;
        entry.listing_id = listing.id;
        entry.quantum_numbers = listing.quantum_numbers;
        entry.listed_norm_squared = listing.norm_squared();

        std::size_t hit = computed.size();
        for (std::size_t i = 0; i < computed.size(); ++i)
            if (computed[i].quantum_numbers == listing.quantum_numbers) hit = i;
        const ExactCoupledState* exact = nullptr;
        for (const auto& o : oracle)
            if (o.quantum_numbers == listing.quantum_numbers) exact = &o;

        if (hit == computed.size() || !exact) {
            entry.verdict = ErrataVerdict::unmatched;
            entry.notes.push_back("no computed state carries " + listing.quantum_numbers.label());
            report.entries.push_back(std::move(entry));
            continue;
        }
        covered[hit] = true;
        for (std::size_t t = 0; t < exact->ms.size(); ++t) entry.corrected.push_back({exact->ms[t], exact->amplitudes[t]});

        const CVector raw = listing.raw_amplitudes(system);
        const CVector oracle_vec = exact->numeric(system);
        entry.notes = term_notes(system, listing, raw, oracle_vec);

        const double norm = raw.norm();
        if (norm == 0.0) {
            entry.verdict = ErrataVerdict::amplitude_mismatch;
            entry.max_deviation = 1.0;
            entry.notes.push_back("all listed amplitudes vanish");
            report.entries.push_back(std::move(entry));
            continue;
        }
        const CVector& target = computed[hit].vector.amplitudes();
        entry.max_deviation = distance_up_to_phase(raw / norm, target);
        const bool normalized = std::abs(entry.listed_norm_squared - 1.0) <= tol.algebraic;

        if (entry.max_deviation > tol.physics) {
            entry.verdict = ErrataVerdict::amplitude_mismatch;
        } else if (!normalized) {
            entry.verdict = ErrataVerdict::normalization_defect;
        } else if ((raw - oracle_vec).cwiseAbs().maxCoeff() <= tol.physics) {
            entry.verdict = ErrataVerdict::exact_match;
        } else {
            entry.verdict = ErrataVerdict::global_phase_match;
        }
        if (!normalized) {
            std::ostringstream note;
            note << "listed squared amplitudes sum to " << format_double(entry.listed_norm_squared);
            entry.notes.push_back(note.str());
        }
        report.entries.push_back(std::move(entry));
    }

    for (std::size_t i = 0; i < computed.size(); ++i) {
        if (covered[i]) continue;
        ErrataEntry entry;
        entry.quantum_numbers = computed[i].quantum_numbers;
        entry.verdict = ErrataVerdict::paper_missing;
        entry.notes.push_back("computed state " + entry.quantum_numbers.label() + " has no listing");
        for (const auto& o : oracle) {
            if (o.quantum_numbers == entry.quantum_numbers) {
                for (std::size_t t = 0; t < o.ms.size(); ++t) entry.corrected.push_back({o.ms[t], o.amplitudes[t]});
            }
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<IdentityCheck> hamiltonian_identity_checks(const SpinSystem& system) {
    std::vector<IdentityCheck> out;
    const auto n = static_cast<Eigen::Index>(total_dimension(dims_of(system)));
    const CMatrix id = CMatrix::Identity(n, n);
    const CMatrix h = spin_spin_hamiltonian(system, CouplingStrength(1.0)).matrix();
    const CMatrix s2 = total_spin(system).squared.matrix();
    double casimirs = 0.0;
    for (const auto& sp : system) casimirs += sp.s().value() * (sp.s().value() + 1.0);

    const std::string label = system_label(system);
    if (label == "e,e") {
        out.push_back(check("eq11", "s1.s2 = (S^2 - 3/2)/2", h, 0.5 * (s2 - 1.5 * id)));
    } else if (label == "p,p") {
        out.push_back(check("eq33", "S^2 = 4 + 2 s1.s2", s2, 4.0 * id + 2.0 * h));
        out.push_back(check("eq35", "H = (g/2)(S^2 - 4)", h, 0.5 * (s2 - 4.0 * id)));
    } else if (label == "e,e,e") {
        const std::vector<std::size_t> pair{0, 1};
        const CMatrix s12 = total_spin(system, pair).squared.matrix();
        const CMatrix pair_dot = spin_spin_hamiltonian({system[0], system[1]}, CouplingStrength(1.0)).matrix();
        out.push_back(check("eq19", "S12^2 = 3/2 + 2 s1.s2", s12,
                            1.5 * id + 2.0 * kron(pair_dot, CMatrix::Identity(2, 2))));
        out.push_back(check("eq20", "S^2 = 9/4 + 2(s1.s2 + s2.s3 + s3.s1)", s2, 2.25 * id + 2.0 * h));
        out.push_back(check("eq21", "H = (g/2)(S12^2 - 9/4) as listed", h, 0.5 * (s12 - 2.25 * id),
                            "holds with the total S^2 in place of S12^2"));
        out.push_back(check("eq21-corrected", "H = (g/2)(S^2 - 9/4)", h, 0.5 * (s2 - 2.25 * id)));
    } else if (label == "p,p,p") {
        const std::vector<std::size_t> pair{0, 1};
        const CMatrix s12 = total_spin(system, pair).squared.matrix();
        const CMatrix pair_dot = spin_spin_hamiltonian({system[0], system[1]}, CouplingStrength(1.0)).matrix();
        out.push_back(check("eq50", "S12^2 = 4 + 2 s1.s2", s12, 4.0 * id + 2.0 * kron(pair_dot, CMatrix::Identity(3, 3))));
        out.push_back(check("eq51", "S123^2 = 6 + 2(s1.s2 + s2.s3 + s3.s1)", s2, 6.0 * id + 2.0 * h));
    } else {
        out.push_back(check("general", "H = (g/2)(S^2 - sum s_i(s_i+1))", h, 0.5 * (s2 - casimirs * id)));
    }
    return out;
}

nlohmann::json to_json(const ErrataReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json corrected = nlohmann::json::array();
        for (const auto& t : e.corrected) {
            nlohmann::json ms = nlohmann::json::array();
            for (auto m : t.ms) ms.push_back(m.to_string());
            corrected.push_back({{"ms", ms},
                                 {"exact", t.amplitude.to_string()},
                                 {"coeff_num", t.amplitude.numerator},
                                 {"coeff_den_sqrt", t.amplitude.radicand},
                                 {"sign", t.amplitude.sign < 0 ? "-" : "+"},
                                 {"value", t.amplitude.value()}});
        }
        const auto& q = e.quantum_numbers;
        entries.push_back({
            {"listing_id", e.listing_id.empty() ? nlohmann::json(nullptr) : nlohmann::json(e.listing_id)},
            {"label", q.label()},
            {"S_prime", q.s_intermediate ? nlohmann::json(q.s_intermediate->to_string()) : nlohmann::json(nullptr)},
            {"S", q.s_total.to_string()},
            {"M_s", q.m_total.to_string()},
            {"verdict", to_string(e.verdict)},
            {"max_deviation", e.max_deviation},
            {"listed_norm_squared", e.listed_norm_squared},
            {"notes", e.notes},
            {"corrected", corrected},
        });
    }
    nlohmann::json identities = nlohmann::json::array();
    for (const auto& i : report.identities) {
        identities.push_back({{"id", i.id},
                              {"statement", i.statement},
                              {"holds", i.holds},
                              {"max_deviation", i.max_deviation},
                              {"note", i.note}});
    }
    nlohmann::json counts = nlohmann::json::object();
    for (auto v : {ErrataVerdict::exact_match, ErrataVerdict::global_phase_match, ErrataVerdict::normalization_defect,
                   ErrataVerdict::amplitude_mismatch, ErrataVerdict::unmatched, ErrataVerdict::paper_missing}) {
        counts[to_string(v)] = report.count(v);
    }
    return {{"system", report.system},
            {"listing_set", report.listing_set},
            {"counts", counts},
            {"entries", entries},
            {"identities", identities}};
}

std::string to_text(const ErrataReport& report) {
    std::ostringstream out;
    out << "errata report: system " << report.system << " (listing set " << report.listing_set << ")\n";
    for (const auto& e : report.entries) {
        out << (e.listing_id.empty() ? std::string("-") : e.listing_id) << "  " << e.quantum_numbers.label() << "  "
            << to_string(e.verdict) << "  max_deviation=" << format_double(e.max_deviation) << "\n";
        for (const auto& n : e.notes) out << "    note: " << n << "\n";
        if (e.verdict == ErrataVerdict::amplitude_mismatch || e.verdict == ErrataVerdict::normalization_defect ||
            e.verdict == ErrataVerdict::paper_missing) {
            out << "    corrected:";
            for (const auto& t : e.corrected) out << " " << t.amplitude.to_string() << ms_string(t.ms);
            out << "\n";
        }
    }
    out << "identities:\n";
    for (const auto& i : report.identities) {
        out << "  " << i.id << "  " << i.statement << "  " << (i.holds ? "holds" : "FAILS")
            << "  max_deviation=" << format_double(i.max_deviation);
        if (!i.holds && !i.note.empty()) out << "  (" << i.note << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace spinent
