// JSON encoding of the domain types. Exact rationals serialize as "p/q"
// strings (plain "p" for integers) and parse back losslessly.

#pragma once

#include <ca1/basket_enum.hpp>
#include <ca1/catalog.hpp>
#include <ca1/duval.hpp>
#include <ca1/wblowup.hpp>

#include <json.hpp>

namespace ca1 {

inline void to_json(nlohmann::json& j, const Rat& q) { j = rat_str(q); }
inline void from_json(const nlohmann::json& j, Rat& q) { q = parse_rat(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const FictitiousPoint& p) {
    j = nlohmann::json{{"r", p.r}, {"v", p.v}};
    if (p.b) j["b"] = *p.b;
}
inline void from_json(const nlohmann::json& j, FictitiousPoint& p) {
    j.at("r").get_to(p.r);
    j.at("v").get_to(p.v);
    if (j.contains("b")) p.b = j.at("b").get<long long>();
    else p.b.reset();
}

inline void to_json(nlohmann::json& j, const Basket& b) { j = b.points; }
inline void from_json(const nlohmann::json& j, Basket& b) {
    b.points = j.get<std::vector<FictitiousPoint>>();
    b.canonicalize();
}

inline void to_json(nlohmann::json& j, const WeightVec4& w) {
    j = nlohmann::json::array({w[0], w[1], w[2], w[3]});
}
inline void from_json(const nlohmann::json& j, WeightVec4& w) {
    w = WeightVec4(j.at(0).get<long long>(), j.at(1).get<long long>(),
                   j.at(2).get<long long>(), j.at(3).get<long long>());
}

inline void to_json(nlohmann::json& j, const CyclicAction& q) {
    j = nlohmann::json{{"r", q.r}, {"weights", q.weights}, {"display", q.str()}};
}
inline void from_json(const nlohmann::json& j, CyclicAction& q) {
    q = CyclicAction(j.at("r").get<long long>(), j.at("weights").get<std::vector<long long>>());
}

namespace wbl {

inline void to_json(nlohmann::json& j, const Verdict& v) {
    switch (v) {
        case Verdict::terminal: j = "terminal"; break;
        case Verdict::non_terminal: j = "non-terminal"; break;
        case Verdict::unknown: j = "unknown"; break;
    }
}

inline void to_json(nlohmann::json& j, const ValuationCertificate& c) {
    j = nlohmann::json{{"index", c.index}, {"numerators", c.numerators}, {"d", rat_str(c.d)}};
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
    switch (c.type) {
        case Certificate::Type::none: j = nullptr; return;
        case Certificate::Type::reid_tai_witness:
            j = nlohmann::json{{"type", "reid-tai-witness"}, {"k", c.rt_k}};
            return;
        case Certificate::Type::valuation:
            j = nlohmann::json{{"type", "valuation"}, {"valuation", *c.valuation}};
            return;
        case Certificate::Type::singular_locus:
            j = nlohmann::json{{"type", "singular-locus"}, {"locus", c.locus}};
            return;
    }
}

inline void to_json(nlohmann::json& j, const SingularityReport& rep) {
    j = nlohmann::json::object();
    switch (rep.where) {
        case SingularityReport::Where::chart_origin:
            j["location"] = {{"kind", "chart-origin"}, {"chart", rep.chart}};
            break;
        case SingularityReport::Where::axis_curve:
            j["location"] = {{"kind", "axis-curve"}, {"chart", rep.chart}, {"axis", rep.axis}};
            break;
        case SingularityReport::Where::off_origin_locus:
            j["location"] = {{"kind", "off-origin-locus"}, {"chart", rep.chart}};
            break;
    }
    switch (rep.kind) {
        case SingularityReport::Kind::smooth: j["kind"] = "smooth"; break;
        case SingularityReport::Kind::quotient:
            j["kind"] = "quotient";
            j["action"] = rep.quotient;
            break;
        case SingularityReport::Kind::cA:
            j["kind"] = "cA";
            j["germ"] = rep.germ.str({"u1", "u2", "u3", "u4"});
            if (rep.cA_exponent >= 0) j["power"] = rep.cA_exponent;
            break;
        case SingularityReport::Kind::hypersurface_quotient:
            j["kind"] = "hypersurface-quotient";
            j["germ"] = rep.germ.str({"u1", "u2", "u3", "u4"});
            j["action"] = rep.germ_action;
            break;
    }
    j["verdict"] = rep.verdict;
    j["certificate"] = rep.certificate;
    if (!rep.note.empty()) j["note"] = rep.note;
}

inline void to_json(nlohmann::json& j, const BlowupAnalysis& an) {
    j = nlohmann::json{{"weights", an.w},
                       {"N", an.N},
                       {"a", an.a},
                       {"E3", rat_str(an.E3)},
                       {"exceptional", an.exceptional.str()},
                       {"exceptional_irreducible",
                        an.exceptional_irreducible == Irreducibility::irreducible},
                       {"reports", an.reports},
                       {"verdict", an.overall}};
}

}  // namespace wbl

namespace baskets {

inline void to_json(nlohmann::json& j, const Candidate& c) {
    j = nlohmann::json{{"J", c.J},
                       {"display", c.J.str()},
                       {"a", c.a},
                       {"E3", rat_str(c.E3)},
                       {"r", c.r},
                       {"case", c.case_label}};
}
inline void from_json(const nlohmann::json& j, Candidate& c) {
    j.at("J").get_to(c.J);
    j.at("a").get_to(c.a);
    c.E3 = parse_rat(j.at("E3").get<std::string>());
    j.at("r").get_to(c.r);
    j.at("case").get_to(c.case_label);
}

inline void to_json(nlohmann::json& j, const TableRow& row) {
    j = nlohmann::json{{"shape", row.shape}, {"aE3", row.aE3_display}};
    if (row.parametric) j["parametric"] = true;
    else j["J"] = row.J;
}

inline void to_json(nlohmann::json& j, const ExclusionRecord& rec) {
    std::string bs = "(";
    for (std::size_t k = 0; k < rec.J_with_b.points.size(); ++k) {
        if (k) bs += ",";
        bs += std::to_string(rec.J_with_b.points[k].b.value_or(0));
    }
    bs += ")";
    j = nlohmann::json{{"J", rec.J_with_b},
                       {"display", rec.J_with_b.str()},
                       {"b_assignment", bs},
                       {"a", rec.a},
                       {"e", rec.e},
                       {"A1", rat_str(rec.A1)},
                       {"A2", rat_str(rec.A2)},
                       {"Ec2_i1", rat_str(rec.verdict.ec2_i1)},
                       {"Ec2_i2", rat_str(rec.verdict.ec2_i2)},
                       {"contradiction", rec.verdict.contradiction}};
}

}  // namespace baskets

namespace duval {

inline void to_json(nlohmann::json& j, const ResolutionProfile& p) {
    j = nlohmann::json{{"s1", p.s1},
                       {"s2", p.s2},
                       {"intersections", {rat_str(p.intersection1), rat_str(p.intersection2)}},
                       {"mult", p.mult}};
}

}  // namespace duval

namespace catalog {

inline void to_json(nlohmann::json& j, const Contraction& c) {
    j = nlohmann::json{{"N", c.N},
                       {"weights", c.weights},
                       {"kind", c.kind == Contraction::Kind::family ? "family" : "exceptional-1532"},
                       {"a", c.a},
                       {"E3", rat_str(c.E3)},
                       {"basket", c.basket},
                       {"basket_display", c.basket.str()},
                       {"case", c.case_label},
                       {"verified", c.verified}};
    if (c.kind == Contraction::Kind::family) {
        j["s"] = c.s;
        j["t"] = c.t;
    }
}
inline void from_json(const nlohmann::json& j, Contraction& c) {
    j.at("N").get_to(c.N);
    j.at("weights").get_to(c.weights);
    c.kind = j.at("kind").get<std::string>() == "family" ? Contraction::Kind::family
                                                         : Contraction::Kind::exceptional_1532;
    j.at("a").get_to(c.a);
    c.E3 = parse_rat(j.at("E3").get<std::string>());
    j.at("basket").get_to(c.basket);
    j.at("case").get_to(c.case_label);
    j.at("verified").get_to(c.verified);
    if (j.contains("s")) {
        j.at("s").get_to(c.s);
        j.at("t").get_to(c.t);
    }
}

inline void to_json(nlohmann::json& j, const Check& c) {
    j = nlohmann::json{{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

inline void to_json(nlohmann::json& j, const VerifyReport& rep) {
    j = nlohmann::json{{"N", rep.N},
                       {"weights", rep.weights},
                       {"analysis", rep.analysis},
                       {"checks", rep.checks},
                       {"consistent", rep.consistent}};
    if (rep.basket) {
        j["basket"] = rep.basket->J;
        j["basket_display"] = rep.basket->J.str();
        j["a"] = rep.basket->a;
        j["r"] = rep.basket->r;
        j["e"] = rep.basket->e;
    }
}

}  // namespace catalog
}  // namespace ca1
