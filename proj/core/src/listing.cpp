// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/listing.hpp>

#include "listing_data.hpp"

#include <spinent/errors.hpp>

#include <cmath>
#include <sstream>

namespace spinent {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line_no) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != tok.size() || tok.empty() || tok.front() == '-') {
        throw ValidationError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + tok + "'");
    }
    return v;
}

PaperVerdict parse_verdict(const std::string& tok, std::size_t line_no) {
    if (tok == "entangled") return PaperVerdict::entangled;
    if (tok == "not-entangled") return PaperVerdict::not_entangled;
    if (tok == "ambiguous") return PaperVerdict::ambiguous;
    throw ValidationError("line " + std::to_string(line_no) + ": unknown verdict '" + tok + "'");
}

}  // namespace

double ListingTerm::value() const {
    return sign * static_cast<double>(numerator) / std::sqrt(static_cast<double>(radicand));
}

double PaperListing::norm_squared() const {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.value() * t.value();
    return sum;
}

CVector PaperListing::raw_amplitudes(const SpinSystem& system) const {
    const Dims dims = dims_of(system);
    CVector v = CVector::Zero(static_cast<Eigen::Index>(total_dimension(dims)));
    std::vector<std::size_t> digits(system.size());
    for (const auto& t : terms) {
        if (t.ms.size() != system.size()) {
            throw ValidationError("listing " + id + ": term has " + std::to_string(t.ms.size()) + " m values for " +
                                  std::to_string(system.size()) + " particles");
        }
        for (std::size_t k = 0; k < system.size(); ++k) digits[k] = system[k].slot_of(t.ms[k]);
        v[static_cast<Eigen::Index>(flat_index(dims, digits))] += t.value();
    }
    return v;
}

StateVector PaperListing::state(const SpinSystem& system) const {
    return StateVector::normalized(dims_of(system), raw_amplitudes(system));
}

std::string to_string(PaperVerdict v) {
    switch (v) {
        case PaperVerdict::entangled: return "entangled";
        case PaperVerdict::not_entangled: return "not-entangled";
        case PaperVerdict::ambiguous: return "ambiguous";
    }
    return "unknown";
}

const PaperListing* ListingSet::find(std::string_view id) const {
    for (const auto& l : listings)
        if (l.id == id) return &l;
    return nullptr;
}

std::optional<PaperVerdict> ListingSet::verdict(std::string_view id) const {
    auto it = verdicts.find(std::string(id));
    if (it == verdicts.end()) return std::nullopt;
    return it->second;
}

ListingSet parse_listing_set(std::string_view text, std::string name) {
    ListingSet set;
    set.name = std::move(name);
    bool have_system = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line.compare(first, 2, "#!") == 0) {
            const auto tok = split_ws(std::string_view(line).substr(first + 2));
            if (tok.size() == 2 && tok[0] == "system") {
                set.system = parse_system(tok[1]);
                have_system = true;
            } else if (tok.size() == 3 && tok[0] == "verdict") {
                set.verdicts[tok[1]] = parse_verdict(tok[2], line_no);
            } else {
                throw ValidationError("line " + std::to_string(line_no) + ": unknown directive");
            }
            continue;
        }
        if (line[first] == '#') continue;

        const auto bar1 = line.find('|');
        const auto bar2 = bar1 == std::string::npos ? bar1 : line.find('|', bar1 + 1);
        if (bar2 == std::string::npos || line.find('|', bar2 + 1) != std::string::npos) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected three '|'-separated fields");
        }
        const auto head = split_ws(std::string_view(line).substr(0, bar1));
        const auto ms = split_ws(std::string_view(line).substr(bar1 + 1, bar2 - bar1 - 1));
        const auto coeff = split_ws(std::string_view(line).substr(bar2 + 1));
        if (head.size() != 4 || coeff.size() != 3 || ms.empty()) {
            throw ValidationError("line " + std::to_string(line_no) + ": malformed amplitude line");
        }

        QuantumNumbers q{head[1] == "-" ? std::nullopt : std::optional<HalfInt>(HalfInt::parse(head[1])),
                         HalfInt::parse(head[2]), HalfInt::parse(head[3])};
        ListingTerm term;
        for (const auto& m : ms) term.ms.push_back(HalfInt::parse(m));
        term.numerator = parse_u64(coeff[0], line_no);
        term.radicand = parse_u64(coeff[1], line_no);
        if (term.radicand == 0) throw ValidationError("line " + std::to_string(line_no) + ": zero radicand");
        if (coeff[2] == "+") term.sign = 1;
        else if (coeff[2] == "-") term.sign = -1;
        else throw ValidationError("line " + std::to_string(line_no) + ": sign must be '+' or '-'");

        PaperListing* target = nullptr;
        for (auto& l : set.listings)
            if (l.id == head[0]) target = &l;
        if (!target) {
            set.listings.push_back({head[0], q, {}});
            target = &set.listings.back();
        } else if (!(target->quantum_numbers == q)) {
            throw ValidationError("line " + std::to_string(line_no) + ": listing " + head[0] +
                                  " changes its quantum numbers");
        }
        if (have_system && term.ms.size() != set.system.size()) {
            throw ValidationError("line " + std::to_string(line_no) + ": wrong number of m values");
        }
        target->terms.push_back(std::move(term));
    }
    if (!have_system) throw ValidationError("listing file has no '#! system' directive");
    return set;
}

std::string format_listing_line(const std::string& id, const QuantumNumbers& q, const std::vector<HalfInt>& ms,
                                std::uint64_t numerator, std::uint64_t radicand, int sign) {
    std::string out = id + " " + (q.s_intermediate ? q.s_intermediate->to_string() : std::string("-")) + " " +
                      q.s_total.to_string() + " " + q.m_total.to_string() + " |";
    for (const auto& m : ms) out += " " + m.to_string();
    out += " | " + std::to_string(numerator) + " " + std::to_string(radicand) + " " + (sign < 0 ? "-" : "+");
    return out;
}

const std::vector<ListingSet>& builtin_listing_sets() {
    static const std::vector<ListingSet> sets = [] {
        std::vector<ListingSet> out;
        for (std::size_t i = 0; i < detail::kEmbeddedListingCount; ++i) {
            const auto& e = detail::kEmbeddedListings[i];
            out.push_back(parse_listing_set(e.text, std::string(e.name)));
        }
        return out;
    }();
    return sets;
}

const ListingSet* builtin_listing_set(const SpinSystem& system) {
    for (const auto& s : builtin_listing_sets())
        if (s.system == system) return &s;
    return nullptr;
}

std::optional<ListingRef> find_builtin_listing(std::string_view id) {
    for (const auto& s : builtin_listing_sets()) {
        if (const auto* l = s.find(id)) return ListingRef{&s, l};
    }
    return std::nullopt;
}

}  // namespace spinent
