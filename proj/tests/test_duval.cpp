// Du Val chain intersections: pullback coefficients against the closed
// forms, exhaustively over all contraction subsets for s <= 12.

#include <ca1/duval.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ca1;
using duval::ChainConfig;

TEST_CASE("pullback coefficients on small chains") {
    {
        auto c = duval::pullback_coeffs(ChainConfig(3, {true, true, false}), 3);
        REQUIRE(c.size() == 2);
        CHECK(c.at(1) == make_rat(1, 3));
        CHECK(c.at(2) == make_rat(2, 3));
    }
    {
        auto c = duval::pullback_coeffs(ChainConfig(2, {false, true}), 1);
        REQUIRE(c.size() == 1);
        CHECK(c.at(2) == make_rat(1, 2));
    }
    {
        auto c = duval::pullback_coeffs(ChainConfig(1, {false}), 1);
        CHECK(c.empty());
    }
    CHECK_THROWS_AS(duval::pullback_coeffs(ChainConfig(3, {true, false, true}), 1),
                    std::invalid_argument);  // contracted k
}

TEST_CASE("end-segment coefficients form the arithmetic progression j/(k+1)") {
    for (long long s = 2; s <= 12; ++s)
        for (long long k = 1; k < s; ++k) {
            // contract nodes 1..k, pull back F_{k+1}
            std::vector<bool> contracted(static_cast<std::size_t>(s), false);
            for (long long j = 1; j <= k; ++j) contracted[static_cast<std::size_t>(j - 1)] = true;
            auto c = duval::pullback_coeffs(ChainConfig(s, contracted), k + 1);
            for (long long j = 1; j <= k; ++j) CHECK(c.at(j) == Rat(Int(j), Int(k + 1)));
        }
}

TEST_CASE("profile on quoted configurations") {
    {
        auto p = duval::partial_resolution_profile(ChainConfig::from_mask(5, 0b10011));
        CHECK(p.s1 == 2);
        CHECK(p.s2 == 1);
        CHECK(p.intersection1 == make_rat(1, 3));
        CHECK(p.intersection2 == make_rat(1, 2));
        CHECK(p.mult == 1);
    }
    {
        auto p = duval::partial_resolution_profile(ChainConfig(1, {false}));
        CHECK(p.s1 == 0);
        CHECK(p.s2 == 0);
        CHECK(p.intersection1 == Rat(1));
        CHECK(p.intersection2 == Rat(1));
    }
    {
        auto p = duval::partial_resolution_profile(ChainConfig(4, {false, true, true, false}));
        CHECK(p.s1 == 0);
        CHECK(p.s2 == 0);
    }
}

TEST_CASE("exhaustive s <= 12: intersections equal 1/(s_i+1) and s1+s2 < s") {
    long long configs = 0;
    for (long long s = 1; s <= 12; ++s)
        for (unsigned long long mask = 0; mask + 1 < (1ULL << s); ++mask) {
            auto cfg = ChainConfig::from_mask(s, mask);
            auto p = duval::partial_resolution_profile(cfg);
            REQUIRE(p.intersection1 == Rat(1) / (p.s1 + 1));
            REQUIRE(p.intersection2 == Rat(1) / (p.s2 + 1));
            REQUIRE(p.s1 + p.s2 < s);
            ++configs;
        }
    CHECK(configs == (1 << 13) - 2 - 12);  // sum over s of 2^s - 1
}

TEST_CASE("match_indices") {
    auto m = duval::match_indices(2, 4);
    CHECK(m.s_min == 5);
    CHECK(m.type1 == 1);
    CHECK(m.type2 == 3);
    auto m2 = duval::match_indices(1, 9);
    CHECK(m2.s_min == 9);
    CHECK(m2.type1 == 0);
    auto m3 = duval::match_indices(3, 5);
    CHECK(m3.s_min == 7);
    CHECK_THROWS_AS(duval::match_indices(5, 3), std::invalid_argument);
}

TEST_CASE("chain config validation") {
    CHECK_THROWS_AS(ChainConfig(2, {true, true}), std::invalid_argument);
    CHECK_THROWS_AS(ChainConfig(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(ChainConfig(2, {true}), std::invalid_argument);
}
