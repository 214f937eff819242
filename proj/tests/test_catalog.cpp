// Catalog driver and the CLI-facing command layer: enumeration counts,
// verification reports, exit codes and JSON round trips.

#include <ca1/catalog.hpp>
#include <ca1/commands.hpp>
#include <ca1/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace ca1;
using catalog::Contraction;

namespace {

long long expected_count(long long N) {
    long long count = 0;
    for (long long t = 1; 2 * t <= N; ++t)
        for (long long s = 1; s <= t; ++s) count += gcd_ll(s, t) == 1;
    return count + (N == 3 ? 1 : 0);
}

}  // namespace

TEST_CASE("catalog counts and membership") {
    {
        auto list = catalog::enumerate_contractions(2);
        REQUIRE(list.size() == 1);
        CHECK(list[0].weights == WeightVec4(1, 1, 1, 1));
        CHECK(list[0].a == 1);
        CHECK(list[0].case_label == "1");
    }
    {
        auto list = catalog::enumerate_contractions(3);
        REQUIRE(list.size() == 2);
        CHECK(list[0].weights == WeightVec4(1, 1, 1, 1));
        CHECK(list[1].weights == WeightVec4(1, 5, 3, 2));
        CHECK(list[1].a == 4);
        CHECK(list[1].kind == Contraction::Kind::exceptional_1532);
        CHECK(list[1].case_label == "2.1.1");
        CHECK(list[1].basket.points[0].r == 5);
    }
    {
        auto list = catalog::enumerate_contractions(7);
        std::vector<std::pair<long long, long long>> st;
        for (const auto& c : list) st.emplace_back(c.s, c.t);
        CHECK(st == std::vector<std::pair<long long, long long>>{{1, 1}, {1, 2}, {1, 3}, {2, 3}});
    }
    for (long long N = 2; N <= 12; ++N) {
        auto list = catalog::enumerate_contractions(N);
        CHECK(static_cast<long long>(list.size()) == expected_count(N));
        for (const auto& c : list) {
            CHECK(c.verified);
            // Each basket lands in a case compatible with its discrepancy.
            if (c.a == 1) CHECK(c.case_label == "1");
            else if (c.kind == Contraction::Kind::exceptional_1532) {
                CHECK(c.case_label == "2.1.1");
                CHECK(c.a == 4);
            } else {
                CHECK((c.case_label == "2.1.2" || c.case_label == "2.2"));
                CHECK(c.a == c.t);
            }
        }
    }
}

TEST_CASE("grid completeness: terminal verdicts = catalog members and mirrors") {
    // Over all weights in [1..5]^4 and N in 2..8, the analysis returns
    // terminal exactly on the catalog members and their x<->y mirrors (the
    // germ is symmetric in x and y). Everything else on the grid must be
    // flagged: a spurious terminal here would contradict the catalog's
    // completeness, a missed one its verification.
    std::set<std::array<long long, 5>> expected;
    for (long long N = 2; N <= 8; ++N)
        for (const auto& c : catalog::enumerate_contractions(N)) {
            bool in_grid = true;
            for (int j = 0; j < 4; ++j)
                in_grid = in_grid && c.weights[static_cast<std::size_t>(j)] <= 5;
            if (!in_grid) continue;
            expected.insert({c.weights[0], c.weights[1], c.weights[2], c.weights[3], N});
            expected.insert({c.weights[1], c.weights[0], c.weights[2], c.weights[3], N});
        }
    std::set<std::array<long long, 5>> got;
    for (long long w1 = 1; w1 <= 5; ++w1)
        for (long long w2 = 1; w2 <= 5; ++w2)
            for (long long w3 = 1; w3 <= 5; ++w3)
                for (long long w4 = 1; w4 <= 5; ++w4)
                    for (long long N = 2; N <= 8; ++N)
                        if (wbl::analyze(WeightVec4(w1, w2, w3, w4), N).overall ==
                            wbl::Verdict::terminal)
                            got.insert({w1, w2, w3, w4, N});
    CHECK(got == expected);
}

TEST_CASE("verify_weights reports") {
    {
        auto rep = catalog::verify_weights(8, WeightVec4(2, 4, 3, 1));
        CHECK(rep.analysis.overall == wbl::Verdict::terminal);
        CHECK(rep.consistent);
        REQUIRE(rep.basket.has_value());
        CHECK(rep.basket->a == 3);
        CHECK(rep.analysis.E3 == make_rat(1, 4));
        Basket plain = rep.basket->J;
        for (auto& p : plain.points) p.b.reset();
        CHECK(plain == (Basket{{2, 1, {}}, {4, 1, {}}}));
    }
    {
        auto rep = catalog::verify_weights(4, WeightVec4(1, 5, 3, 2));
        CHECK(rep.analysis.overall == wbl::Verdict::non_terminal);
        CHECK(rep.consistent);  // certificates re-verify
    }
    {
        auto rep = catalog::verify_weights(8, WeightVec4(2, 6, 4, 1));
        CHECK(rep.analysis.overall == wbl::Verdict::non_terminal);
        long long quotient_hits = 0;
        for (const auto& srep : rep.analysis.reports) {
            if (srep.kind != wbl::SingularityReport::Kind::quotient) continue;
            if (actions_isomorphic(srep.quotient, CyclicAction(2, {-1, 4, 1})) ||
                actions_isomorphic(srep.quotient, CyclicAction(6, {-1, 4, 1})))
                ++quotient_hits;
        }
        CHECK(quotient_hits == 2);
    }
}

TEST_CASE("command exit codes") {
    CHECK(cmd::run_verify(8, WeightVec4(2, 4, 3, 1), 4).exit_code == 0);
    CHECK(cmd::run_verify(4, WeightVec4(1, 5, 3, 2), 4).exit_code == 1);
    CHECK(cmd::run_contractions(9).exit_code == 0);
    CHECK(cmd::run_proof_table().exit_code == 0);
    CHECK(cmd::run_baskets(0, 64).exit_code == 0);
    CHECK(cmd::run_duval(5, 0b10011).exit_code == 0);
}

TEST_CASE("JSON envelope shape") {
    auto res = cmd::run_verify(6, WeightVec4(2, 4, 3, 1), 4);
    CHECK(res.doc.contains("command"));
    CHECK(res.doc.contains("inputs"));
    CHECK(res.doc.contains("results"));
    CHECK(res.doc.contains("checks"));
    for (const auto& c : res.doc.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("lhs"));
        CHECK(c.contains("rhs"));
    }
}

TEST_CASE("contractions JSON round-trips through the parser") {
    auto list = catalog::enumerate_contractions(10);
    nlohmann::json j = list;
    auto back = j.get<std::vector<Contraction>>();
    REQUIRE(back.size() == list.size());
    for (std::size_t k = 0; k < list.size(); ++k) {
        CHECK(back[k].N == list[k].N);
        CHECK(back[k].weights == list[k].weights);
        CHECK(back[k].kind == list[k].kind);
        CHECK(back[k].a == list[k].a);
        CHECK(back[k].E3 == list[k].E3);
        CHECK(back[k].basket == list[k].basket);
        CHECK(back[k].case_label == list[k].case_label);
    }
    CHECK(nlohmann::json(back) == j);
}

TEST_CASE("candidate and rational JSON round trip") {
    auto res = baskets::enumerate_candidates(1, 16);
    nlohmann::json j = res.candidates;
    auto back = j.get<std::vector<baskets::Candidate>>();
    REQUIRE(back.size() == res.candidates.size());
    for (std::size_t k = 0; k < back.size(); ++k) {
        CHECK(back[k].J == res.candidates[k].J);
        CHECK(back[k].a == res.candidates[k].a);
        CHECK(back[k].E3 == res.candidates[k].E3);
    }
}

TEST_CASE("table rendering mentions the key facts") {
    auto res = cmd::run_verify(3, WeightVec4(1, 5, 3, 2), 4);
    std::string text = cmd::render_table(res.doc);
    CHECK(text.find("terminal") != std::string::npos);
    CHECK(text.find("1/5") != std::string::npos);
    auto res2 = cmd::run_proof_table();
    std::string table = cmd::render_table(res2.doc);
    CHECK(table.find("2/7") != std::string::npos);
    CHECK(table.find("1/r3") != std::string::npos);
}
