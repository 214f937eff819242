// The numerical game: proof-table rows, candidate enumeration per defect,
// and the two-point bounds.

#include <ca1/basket_enum.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ca1;

TEST_CASE("proof table reproduces every row") {
    auto rows = baskets::proof_table();
    std::vector<std::pair<std::string, std::string>> expected = {
        {"{(7,3)}", "2/7"},   {"{(8,3)}", "1/8"},   {"(2, 5)", "3/10"},
        {"(3, 5)", "2/15"},   {"(4, 5)", "1/20"},   {"(2, 7)", "1/14"},
        {"(2, 2, r3)", "1/r3"}, {"(2, 3, 3)", "1/6"}, {"(2, 3, 4)", "1/12"},
        {"(2, 3, 5)", "1/30"},
    };
    REQUIRE(rows.size() == expected.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].shape == expected[k].first);
        CHECK(rows[k].aE3_display == expected[k].second);
    }
    // Every concrete row really has sum v = 3 and positive aE3.
    for (const auto& row : rows) {
        if (row.parametric) continue;
        CHECK(rr::sum_v(row.J) == 3);
        CHECK(*row.aE3 > 0);
    }
}

TEST_CASE("d = 0: three pre-exclusion survivors, two final candidates") {
    auto res = baskets::enumerate_candidates(0);

    REQUIRE(res.pre_exclusion.size() == 3);
    CHECK(res.pre_exclusion[0].J == Basket{{7, 3, {}}});
    CHECK(res.pre_exclusion[0].a == 2);
    CHECK(res.pre_exclusion[1].J == (Basket{{2, 1, {}}, {5, 2, {}}}));
    CHECK(res.pre_exclusion[1].a == 3);
    CHECK(res.pre_exclusion[2].J == (Basket{{3, 1, {}}, {5, 2, {}}}));
    CHECK(res.pre_exclusion[2].a == 2);

    REQUIRE(res.candidates.size() == 2);
    CHECK(res.candidates[0].J == Basket{{7, 3, {}}});
    CHECK(res.candidates[0].a == 2);
    CHECK(res.candidates[0].case_label == "2.0");
    CHECK(res.candidates[1].J == (Basket{{3, 1, {}}, {5, 2, {}}}));
    CHECK(res.candidates[1].a == 2);

    // The exclusion report shows the quoted corrections and the two
    // incompatible E.c2 solves for the removed candidate.
    bool saw_excluded = false;
    for (const auto& rec : res.exclusions) {
        Basket plain = rec.J_with_b;
        for (auto& p : plain.points) p.b.reset();
        if (plain == (Basket{{2, 1, {}}, {5, 2, {}}})) {
            saw_excluded = true;
            CHECK(rec.A1 == make_rat(-21, 40));
            CHECK(rec.A2 == Rat(0));
            CHECK(rec.verdict.ec2_i1 == make_rat(61, 10));
            CHECK(rec.verdict.ec2_i2 == make_rat(-59, 10));
            CHECK(rec.verdict.contradiction);
        } else {
            CHECK_FALSE(rec.verdict.contradiction);
        }
    }
    CHECK(saw_excluded);
}

TEST_CASE("d = 1: single-point shape admits a in {2,4} only") {
    auto res = baskets::enumerate_candidates(1, 32);
    for (const auto& c : res.candidates) {
        if (c.J.size() == 1) {
            CHECK(c.case_label == "2.1.1");
            CHECK((c.a == 2 || c.a == 4));
            CHECK(c.J.points[0].v == 2);
            CHECK(c.J.points[0].r % 2 == 1);
        } else {
            CHECK(c.case_label == "2.1.2");
            CHECK(c.J.size() == 2);
        }
    }
    // (r,2) with r = 5..31 odd, two a values each.
    long long singles = 0;
    for (const auto& c : res.candidates) singles += c.J.size() == 1;
    CHECK(singles == 2 * ((31 - 5) / 2 + 1));
    CHECK(res.parametric.size() == 2);
}

TEST_CASE("d = 2: a divides r + 1") {
    auto res = baskets::enumerate_candidates(2, 40);
    CHECK(!res.candidates.empty());
    for (const auto& c : res.candidates) {
        REQUIRE(c.J.size() == 1);
        CHECK(c.J.points[0].v == 1);
        CHECK((c.J.points[0].r + 1) % c.a == 0);
        CHECK(c.case_label == "2.2");
    }
}

TEST_CASE("d = 3: the smooth-point record") {
    auto res = baskets::enumerate_candidates(3);
    REQUIRE(res.candidates.size() == 1);
    CHECK(res.candidates[0].J.empty());
    CHECK(res.candidates[0].a == 2);
    CHECK(res.candidates[0].E3 == Rat(1));
    CHECK(res.candidates[0].case_label == "2.3");
}

TEST_CASE("every emitted candidate satisfies the shared invariants") {
    for (int d = 0; d <= 3; ++d) {
        auto res = baskets::enumerate_candidates(d, 24);
        std::vector<baskets::Candidate> prev;
        for (const auto& c : res.candidates) {
            CHECK(c.a >= 2);
            CHECK(rr::sum_v(c.J) == 3 - d);
            Rat ae3 = rr::a_e3(c.J);
            CHECK(ae3 > 0);
            CHECK(c.E3 == ae3 / c.a);
            CHECK(c.r == c.J.lcm_index());
            Rat rE3 = Rat(Int(c.r)) * c.E3;
            CHECK(is_integer(rE3));
            CHECK(rE3 > 0);
            for (const auto& p : c.J.points) CHECK(gcd_ll(c.a, p.r) == 1);
            // The two routes to the i = 2 quotient must agree:
            // dim O/(-2E) = 1 + dim m/(-2E) = 4 - sum v.
            CHECK(rr::dim_quotient(2, std::max<long long>(2, c.a), c.J) == 4 - rr::sum_v(c.J));
        }
        // canonical order, no duplicates
        for (std::size_t k = 1; k < res.candidates.size(); ++k) {
            const auto& x = res.candidates[k - 1];
            const auto& y = res.candidates[k];
            bool less = x.J.size() < y.J.size() ||
                        (x.J.size() == y.J.size() &&
                         (x.J < y.J || (x.J == y.J && x.a < y.a)));
            CHECK(less);
        }
    }
}

TEST_CASE("case_212_bounds") {
    auto b = baskets::case_212_bounds(2, 4);
    CHECK(b.min_special_type == 5);
    CHECK(b.admits(3));
    CHECK_FALSE(b.admits(4));
    CHECK(b.a_max() == Rat(3));

    auto b2 = baskets::case_212_bounds(1, 9);
    CHECK(b2.min_special_type == 9);
    CHECK(b2.a_max() == Rat(5));
    CHECK(b2.admits(5));
    CHECK_FALSE(b2.admits(6));

    auto b3 = baskets::case_212_bounds(5, 5);
    CHECK(b3.min_special_type == 9);
    CHECK(b3.admits(5));
    CHECK_FALSE(b3.admits(10));  // a = r1 + r2 is excluded outright
}
