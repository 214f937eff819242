// The filtration oracle: monomial counts against the Riemann-Roch
// dimensions, graded layer counts, and the special-surface types.

#include <ca1/filtration.hpp>
#include <ca1/rr.hpp>
#include <ca1/wblowup.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ca1;
using filt::CA1Ring;
using filt::WPoly;

TEST_CASE("filtration dims on pinned cases") {
    CHECK(filt::filtration_dims(CA1Ring(6), WeightVec4(2, 4, 3, 1), 3) ==
          std::vector<long long>{1, 2, 4});
    CHECK(filt::filtration_dims(CA1Ring(3), WeightVec4(1, 5, 3, 2), 4) ==
          std::vector<long long>{1, 2, 4, 7});
    // At i = 2 the count is 1 + #{coordinates of weight 1}; y is a basis
    // monomial and is counted once.
    for (long long t = 1; t <= 5; ++t)
        for (long long s = 1; s <= t; ++s) {
            WeightVec4 w(s, 2 * t - s, t, 1);
            long long wt1 = 0;
            for (int j = 0; j < 4; ++j) wt1 += w[static_cast<std::size_t>(j)] == 1;
            CHECK(filt::filtration_dims(CA1Ring(2 * t), w, 2)[1] == 1 + wt1);
        }
    CHECK(filt::filtration_dims(CA1Ring(2), WeightVec4(1, 1, 1, 1), 2) ==
          std::vector<long long>{1, 5});
}

TEST_CASE("central cross-module oracle: filtration equals RR dims on 1..a") {
    for (long long N = 2; N <= 12; ++N) {
        for (long long t = 1; 2 * t <= N; ++t)
            for (long long s = 1; s <= t; ++s) {
                if (gcd_ll(s, t) != 1) continue;
                WeightVec4 w(s, 2 * t - s, t, 1);
                auto bd = wbl::basket_of(w, N);
                auto fd = filt::filtration_dims(CA1Ring(N), w, bd.a);
                CAPTURE(N, s, t);
                for (long long i = 1; i <= bd.a; ++i)
                    CHECK(fd[static_cast<std::size_t>(i - 1)] ==
                          rr::dim_quotient(i, bd.a, bd.J));
            }
        if (N == 3) {
            auto bd = wbl::basket_of(WeightVec4(1, 5, 3, 2), 3);
            auto fd = filt::filtration_dims(CA1Ring(3), WeightVec4(1, 5, 3, 2), bd.a);
            for (long long i = 1; i <= bd.a; ++i)
                CHECK(fd[static_cast<std::size_t>(i - 1)] == rr::dim_quotient(i, bd.a, bd.J));
        }
    }
}

TEST_CASE("graded counts match floor(i/s) + 1 on the family") {
    CHECK(filt::graded_counts(CA1Ring(6), WeightVec4(2, 4, 3, 1), 3) ==
          std::vector<long long>{1, 1, 2});
    CHECK(filt::graded_counts(CA1Ring(8), WeightVec4(3, 5, 4, 1), 4) ==
          std::vector<long long>{1, 1, 1, 2});
    // s = 1: N_i = i + 1.
    auto counts = filt::graded_counts(CA1Ring(10), WeightVec4(1, 9, 5, 1), 5);
    CHECK(counts == std::vector<long long>{1, 2, 3, 4, 5});
    // Layer sizes are positive, never decrease, and within i < t step up by
    // one exactly when s divides i.
    for (long long t = 2; t <= 6; ++t)
        for (long long s = 1; s <= t; ++s) {
            if (gcd_ll(s, t) != 1) continue;
            auto cs = filt::graded_counts(CA1Ring(2 * t), WeightVec4(s, 2 * t - s, t, 1), t);
            CHECK(cs[0] == 1);
            for (std::size_t k = 1; k < cs.size(); ++k) {
                long long step = cs[k] - cs[k - 1];
                CHECK(cs[k] > 0);
                CHECK(step == (static_cast<long long>(k) % s == 0 ? 1 : 0));
            }
        }
}

TEST_CASE("ord_w") {
    CHECK_FALSE(filt::ord_w(WPoly{}).has_value());  // zero polynomial: +infinity
    CHECK(filt::ord_w(WPoly({Rat(0), Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)})) == 3);
    CHECK(filt::ord_w(WPoly({Rat(1)})) == 0);
}

TEST_CASE("special surface types") {
    // p = 0: type min(2a, N) - 1.
    for (long long a = 2; a <= 6; ++a) {
        CHECK(filt::special_surface_type(a, WPoly{}, 2 * a) == 2 * a - 1);
        CHECK(filt::special_surface_type(a, WPoly{}, 2 * a + 3) == 2 * a - 1);
        if (2 * a - 1 >= 2)
            CHECK(filt::special_surface_type(a, WPoly{}, 2 * a - 1) == 2 * a - 2);
    }
    CHECK(filt::special_surface_type(3, WPoly({Rat(0), Rat(1)}), 10) == 1);
    CHECK_THROWS_AS(filt::special_surface_type(2, WPoly({Rat(1)}), 4), std::invalid_argument);
    // p must live in the span of w^1..w^{a-1}.
    CHECK_THROWS_AS(filt::special_surface_type(2, WPoly({Rat(0), Rat(0), Rat(1)}), 4),
                    std::invalid_argument);

    // Bound: type <= 2a - 1 with equality iff p = 0 and N >= 2a.
    for (long long a = 2; a <= 5; ++a)
        for (long long N = 2; N <= 12; ++N) {
            for (long long op = 1; op <= a - 1; ++op) {
                std::vector<Rat> cs(static_cast<std::size_t>(op) + 1, Rat(0));
                cs.back() = Rat(1);
                WPoly p(cs);
                long long ty = filt::special_surface_type(a, p, N);
                CHECK(ty <= 2 * a - 1);
                CHECK(ty < 2 * a - 1);  // nonzero p always falls short
            }
            long long ty0 = filt::special_surface_type(a, WPoly{}, N);
            CHECK((ty0 == 2 * a - 1) == (N >= 2 * a));
        }
}

TEST_CASE("i_max beyond a is allowed (extrapolation range)") {
    auto fd = filt::filtration_dims(CA1Ring(6), WeightVec4(2, 4, 3, 1), 6);
    CHECK(fd.size() == 6);
    for (std::size_t k = 1; k < fd.size(); ++k) CHECK(fd[k] > fd[k - 1]);
}
