#include <ca1/numeric.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ca1;

TEST_CASE("smallest_residue follows round-down semantics") {
    CHECK(smallest_residue(7, 5) == 2);
    CHECK(smallest_residue(-1, 5) == 4);
    CHECK(smallest_residue(14, 5) == 4);
    CHECK(smallest_residue(0, 1) == 0);
    CHECK(smallest_residue(-10, 1) == 0);
    CHECK_THROWS_AS(smallest_residue(3, 0), std::invalid_argument);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(4, 5) == 4);
    CHECK(mod_inverse(3, 10) == 7);
    CHECK_FALSE(mod_inverse(2, 4).has_value());
    CHECK(mod_inverse(7, 1) == 0);
    CHECK(mod_inverse(-3, 10) == 3);  // -9 = 1 mod 10
}

TEST_CASE("residue and inverse algebra on random inputs") {
    std::mt19937_64 rng(Catch::getSeed() ^ 0x1ULL);
    std::uniform_int_distribution<long long> jd(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long long> rd(1, 4096);
    for (int it = 0; it < 5000; ++it) {
        long long j = jd(rng), r = rd(rng);
        long long m = smallest_residue(j, r);
        CHECK(m >= 0);
        CHECK(m < r);
        CHECK((j - m) % r == 0);
        long long a = jd(rng);
        auto e = mod_inverse(a, r);
        if (std::gcd(a % r < 0 ? a % r + r : a % r, r) == 1) {
            REQUIRE(e.has_value());
            if (r > 1) {
                CHECK(*e >= 1);
                CHECK(*e < r);
                CHECK(smallest_residue(a * *e, r) == 1);
            }
        } else {
            CHECK_FALSE(e.has_value());
        }
    }
}

TEST_CASE("rational arithmetic is exact, reduced and well-behaved") {
    std::mt19937_64 rng(Catch::getSeed() ^ 0x2ULL);
    std::uniform_int_distribution<long long> nd(-1000, 1000);
    std::uniform_int_distribution<long long> dd(1, 1000);
    auto random_rat = [&] { return make_rat(nd(rng), dd(rng)); };
    for (int it = 0; it < 2000; ++it) {
        Rat a = random_rat(), b = random_rat(), c = random_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        Rat s = a + b * c;
        CHECK(rat_den(s) > 0);
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(rat_num(s)), rat_den(s)) == 1);
    }
}

TEST_CASE("rational parse/format round trip") {
    CHECK(rat_str(make_rat(-21, 40)) == "-21/40");
    CHECK(rat_str(make_rat(4, 2)) == "2");
    CHECK(parse_rat("61/10") == make_rat(61, 10));
    CHECK(parse_rat("-59/10") == make_rat(-59, 10));
    CHECK(parse_rat("7") == Rat(7));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    std::mt19937_64 rng(Catch::getSeed() ^ 0x3ULL);
    std::uniform_int_distribution<long long> nd(-100000, 100000);
    std::uniform_int_distribution<long long> dd(1, 100000);
    for (int it = 0; it < 500; ++it) {
        Rat q = make_rat(nd(rng), dd(rng));
        CHECK(parse_rat(rat_str(q)) == q);
    }
}

TEST_CASE("lcm helper") {
    CHECK(lcm_ll(2, 5) == 10);
    CHECK(lcm_ll(4, 6) == 12);
    CHECK_THROWS_AS(lcm_ll(0, 3), std::invalid_argument);
}
