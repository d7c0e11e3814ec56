#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/spectrum.hpp"

using namespace rainbow;

TEST(Spectrum, MatchesPartitionOracleOnCorpus)
{
    for (const auto& [name, g] : fixtures::corpus()) {
        if (g.size() > 9 || g.size() == 0)
            continue;
        auto spec = compute_spectrum(g);
        EXPECT_TRUE(spec.exhaustive);
        EXPECT_EQ(spec.values, oracle::spectrum(g)) << name;
        EXPECT_FALSE(spec.contains(static_cast<int>(g.size()) - 1)) << name;
        for (const auto& [k, w] : spec.witnesses) {
            EXPECT_TRUE(is_proper(g, w.colors())) << name;
            EXPECT_EQ(self_unique_count(w.colors()), k) << name;
        }
    }
}

TEST(Spectrum, SmallCyclesAndPaths)
{
    EXPECT_EQ(compute_spectrum(make_cycle(3)).values, (std::set<int>{3}));
    EXPECT_EQ(compute_spectrum(make_cycle(4)).values, (std::set<int>{0, 2, 4}));
    EXPECT_EQ(compute_spectrum(make_cycle(5)).values, (std::set<int>{1, 3, 5}));
    EXPECT_EQ(compute_spectrum(make_path(1)).values, (std::set<int>{1}));
    EXPECT_EQ(compute_spectrum(make_path(2)).values, (std::set<int>{2}));
    EXPECT_EQ(compute_spectrum(make_path(3)).values, (std::set<int>{1, 3}));
    EXPECT_EQ(compute_spectrum(make_path(4)).values, (std::set<int>{0, 2, 4}));
    EXPECT_EQ(compute_spectrum(make_path(5)).values, full_spectrum_values(5));
}

TEST(Spectrum, DoubleStarClosedForm)
{
    for (int r = 0; r <= 4; ++r)
        for (int s = r; r + s + 1 <= 9; ++s) {
            auto closed = ds_spectrum_closed_form(r, s);
            EXPECT_EQ(compute_spectrum(make_double_star(r, s)).values, closed.values) << r << "," << s;
            auto g = make_double_star(r, s);
            for (const auto& [k, w] : closed.witnesses)
                EXPECT_EQ(self_unique_count(w.colors()), k);
        }
    EXPECT_EQ(ds_spectrum_values(2, 2), (std::set<int>{1, 3, 5}));
    EXPECT_EQ(ds_spectrum_values(3, 1), (std::set<int>{3, 5}));
    EXPECT_THROW(ds_spectrum_values(-1, 2), std::invalid_argument);
}

TEST(Spectrum, CriterionImpliesFullSpectrum)
{
    for (const auto& [name, g] : fixtures::corpus()) {
        if (g.size() > 9 || g.size() < 2)
            continue;
        if (first_qualifying_coloring(g))
            EXPECT_EQ(compute_spectrum(g).values, full_spectrum_values(g.size())) << name;
    }
}

TEST(Spectrum, WitnessFamilyCoversFullSpectrum)
{
    for (const auto& g : {make_cycle(6), make_cycle(8), make_path(6), make_caterpillar({1, 0, 0, 1})}) {
        auto start = first_qualifying_coloring(g);
        ASSERT_TRUE(start);
        auto fam = witness_family(g, *start);
        EXPECT_EQ(fam.size(), g.size());
        std::set<int> got;
        int prev = static_cast<int>(g.size()) + 1;
        for (const auto& c : fam) {
            ASSERT_TRUE(is_proper(g, c.colors()));
            int u = self_unique_count(c.colors());
            EXPECT_LT(u, prev);
            prev = u;
            got.insert(u);
        }
        EXPECT_EQ(got, full_spectrum_values(g.size()));
    }
}

TEST(Spectrum, WitnessFamilyRejectsBadStart)
{
    auto g = make_cycle(6);
    EXPECT_THROW(witness_family(g, rainbow_coloring(g)), std::invalid_argument);
    EXPECT_THROW(witness_family(g, EdgeColoring::unchecked({0, 0, 0, 0, 0, 0})), std::invalid_argument);
    EXPECT_FALSE(first_qualifying_coloring(make_cycle(5)).has_value());
}

TEST(Spectrum, RoundUpIsMonotoneAndIdempotent)
{
    for (const auto& g : {make_path(3), make_cycle(5), make_double_star(1, 2), make_double_star(2, 2)}) {
        auto spec = compute_spectrum(g);
        int prev = -1;
        for (int k = 0; k <= static_cast<int>(g.size()); ++k) {
            int r = round_up_k(spec, g.size(), k);
            EXPECT_GE(r, k);
            EXPECT_TRUE(spec.contains(r));
            EXPECT_EQ(round_up_k(spec, g.size(), r), r);
            EXPECT_GE(r, prev);
            prev = r;
        }
    }
    EXPECT_EQ(round_up_k(make_cycle(4), 1), 2);
    EXPECT_THROW(round_up_k(make_cycle(4), 5), std::invalid_argument);
}

TEST(Spectrum, CapAndBudget)
{
    EXPECT_THROW(compute_spectrum(make_path(13)), CapExceeded);
    auto partial = compute_spectrum(make_path(8), 5);
    EXPECT_FALSE(partial.exhaustive);
}
