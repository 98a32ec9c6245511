// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/coupling.hpp>
#include <spinent/errata.hpp>
#include <spinent/errors.hpp>
#include <spinent/listing.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace spinent {
namespace {

ErrataReport report_for(const char* spec) {
    const auto sys = parse_system(spec);
    const auto* set = builtin_listing_set(sys);
    if (!set) throw std::runtime_error("no listing set");
    return match_paper_listing(sys, coupled_eigenbasis(sys, default_scheme(sys)), *set);
}

TEST(Listing, BuiltinSetsLoad) {
    const auto& sets = builtin_listing_sets();
    ASSERT_EQ(sets.size(), 4u);
    std::size_t total = 0;
    for (const auto& s : sets) total += s.listings.size();
    EXPECT_EQ(total, 4u + 8u + 9u + 26u);
    EXPECT_TRUE(find_builtin_listing("eq15").has_value());
    EXPECT_FALSE(find_builtin_listing("eq16").has_value());
}

TEST(Listing, ParseErrorsNameTheLine) {
    const char* bad = "#! system e,e\neq1 - 1 1 | 1/2 1/2 | 1 1 +\neq2 - 0 0 | 1/2 -1/2 | 1 2 *\n";
    try {
        parse_listing_set(bad);
        FAIL() << "expected a ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_listing_set("eq1 - 1 1 | 1/2 1/2 | 1 1 +\n"), ValidationError);
    EXPECT_THROW(parse_listing_set("#! system e,e\neq1 - 1 1 | 1/2 | 1 1 +\n"), ValidationError);
}

TEST(Listing, FormatRoundTrip) {
    const QuantumNumbers q{std::nullopt, HalfInt::integer(0), HalfInt::integer(0)};
    const std::string line = format_listing_line("eq15", q, {kHalf, -kHalf}, 1, 2, +1);
    const auto set = parse_listing_set("#! system e,e\n" + line + "\n");
    ASSERT_EQ(set.listings.size(), 1u);
    EXPECT_NEAR(set.listings[0].terms[0].value(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Errata, TwoElectronsAllConsistent) {
    const auto r = report_for("e,e");
    EXPECT_EQ(r.entries.size(), 4u);
    EXPECT_EQ(r.find("eq15")->verdict, ErrataVerdict::exact_match);
    for (const auto& e : r.entries) EXPECT_TRUE(direction_consistent(e.verdict)) << e.listing_id;
}

TEST(Errata, TwoPhotonsAllConsistent) {
    const auto r = report_for("p,p");
    EXPECT_EQ(r.entries.size(), 9u);
    for (const auto& e : r.entries) {
        EXPECT_TRUE(direction_consistent(e.verdict)) << e.listing_id;
        EXPECT_LT(e.max_deviation, 1e-10);
    }
}

TEST(Errata, ThreeElectronsWrongTermInSecondState) {
    const auto r = report_for("e,e,e");
    const auto* e25 = r.find("eq25");
    ASSERT_NE(e25, nullptr);
    EXPECT_EQ(e25->verdict, ErrataVerdict::amplitude_mismatch);
    EXPECT_FALSE(e25->corrected.empty());
    for (const char* id : {"eq24", "eq26", "eq27", "eq28", "eq29", "eq30", "eq31"}) {
        EXPECT_TRUE(direction_consistent(r.find(id)->verdict)) << id;
    }
}

TEST(Errata, ThreePhotonFindings) {
    const auto r = report_for("p,p,p");
    std::set<std::string> ids;
    for (const auto& e : r.entries)
        if (!e.listing_id.empty()) EXPECT_TRUE(ids.insert(e.listing_id).second) << e.listing_id;
    EXPECT_EQ(ids.size(), 26u);

    const auto* e67 = r.find("eq67");
    EXPECT_EQ(e67->verdict, ErrataVerdict::amplitude_mismatch);
    EXPECT_NEAR(e67->listed_norm_squared, 42.0 / 60.0, 1e-12);
    EXPECT_EQ(e67->corrected.size(), 7u);
    EXPECT_EQ(r.find("eq75")->verdict, ErrataVerdict::amplitude_mismatch);
    EXPECT_EQ(r.find("eq76")->verdict, ErrataVerdict::amplitude_mismatch);
    // Overall sign flips only.
    EXPECT_EQ(r.find("eq62")->verdict, ErrataVerdict::global_phase_match);
    EXPECT_EQ(r.find("eq66")->verdict, ErrataVerdict::global_phase_match);

    ASSERT_EQ(r.count(ErrataVerdict::paper_missing), 1u);
    const auto& missing = r.entries.back();
    EXPECT_EQ(missing.verdict, ErrataVerdict::paper_missing);
    EXPECT_EQ(missing.quantum_numbers.label(), "chi(1,2,2)");
    EXPECT_EQ(missing.corrected.size(), 2u);
}

TEST(Errata, IdentityChecks) {
    auto find = [](const std::vector<IdentityCheck>& v, const std::string& id) -> const IdentityCheck& {
        for (const auto& c : v)
            if (c.id == id) return c;
        throw std::runtime_error("missing identity " + id);
    };
    const auto ee = hamiltonian_identity_checks(parse_system("e,e"));
    EXPECT_TRUE(find(ee, "eq11").holds);
    const auto pp = hamiltonian_identity_checks(parse_system("p,p"));
    EXPECT_TRUE(find(pp, "eq35").holds);
    const auto eee = hamiltonian_identity_checks(parse_system("e,e,e"));
    EXPECT_FALSE(find(eee, "eq21").holds);  // pair operator where the total is needed
    EXPECT_TRUE(find(eee, "eq21-corrected").holds);
    EXPECT_TRUE(find(eee, "eq20").holds);
}

TEST(Errata, JsonCarriesEveryEntry) {
    const auto r = report_for("p,p,p");
    const auto j = to_json(r);
    EXPECT_EQ(j.at("entries").size(), r.entries.size());
    EXPECT_NE(to_text(r).find("paper-missing"), std::string::npos);
}

}  // namespace
}  // namespace spinent
