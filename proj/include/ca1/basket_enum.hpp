// The numerical game: enumerate baskets J and discrepancies a compatible
// with all of the constraints
//   a >= 2, gcd(a, r_Q) = 1, aE^3 > 0, rE^3 a positive integer,
// stratified by d = dim m_P / f_* O_Y(-2E) = 3 - sum v_Q.

#pragma once

#include <ca1/basket.hpp>
#include <ca1/numeric.hpp>
#include <ca1/rr.hpp>

#include <string>
#include <vector>

namespace ca1::baskets {

// ===== proof table (sum v = 3, aE^3 > 0) ====================================

struct TableRow {
    std::string shape;        // "{(7,3)}", "(2, 5)", "(2, 2, r3)", ...
    Basket J;                 // empty for the parametric row
    std::optional<Rat> aE3;   // absent for the parametric row
    std::string aE3_display;  // "2/7", "1/r3", ...
    bool parametric = false;
};

namespace detail {

inline void push_row(std::vector<TableRow>& rows, Basket J, std::string shape) {
    J.canonicalize();
    TableRow row;
    row.shape = std::move(shape);
    row.J = J;
    row.aE3 = rr::a_e3(J);
    row.aE3_display = rat_str(*row.aE3);
    rows.push_back(std::move(row));
}

}  // namespace detail

// All baskets with sum v_Q = 3 and aE^3 > 0, grouped and ordered as:
// single points {(r,3)}; pairs {(r1,1),(r2,2)} by (r2, r1); triples
// {(r1,1),(r2,1),(r3,1)} with the (2,2,r3) family emitted parametrically.
inline std::vector<TableRow> proof_table() {
    std::vector<TableRow> rows;

    // {(r,3)}: 2v <= r forces r >= 6; positivity (9-r)/r > 0 forces r < 9.
    for (long long r = 6; r < 9; ++r) {
        if (gcd_ll(3, r) != 1) continue;
        detail::push_row(rows, Basket{{r, 3, {}}}, "{(" + std::to_string(r) + ",3)}");
    }

    // {(r1,1),(r2,2)}: r2 odd >= 5; positivity 1/r1 + 4/r2 > 1 bounds both.
    std::vector<std::pair<long long, long long>> pairs;
    for (long long r1 = 2; r1 <= 8; ++r1)
        for (long long r2 = 5; r2 <= 8 * r1; r2 += 2) {
            Basket J{{r1, 1, {}}, {r2, 2, {}}};
            if (rr::a_e3(J) > 0) pairs.emplace_back(r1, r2);
        }
    std::sort(pairs.begin(), pairs.end(), [](auto x, auto y) {
        return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    });
    for (auto [r1, r2] : pairs)
        detail::push_row(rows, Basket{{r1, 1, {}}, {r2, 2, {}}},
                         "(" + std::to_string(r1) + ", " + std::to_string(r2) + ")");

    // {(r1,1),(r2,1),(r3,1)}, r1 <= r2 <= r3: positivity 1/r1+1/r2+1/r3 > 1
    // forces r1 = 2 and r2 in {2, 3}. r2 = 2 gives aE^3 = 1/r3 for every
    // r3, emitted parametrically; r2 = 3 bounds r3 < 6.
    TableRow family;
    family.shape = "(2, 2, r3)";
    family.aE3_display = "1/r3";
    family.parametric = true;
    rows.push_back(family);
    for (long long r3 = 3; r3 <= 5; ++r3) {
        Basket J{{2, 1, {}}, {3, 1, {}}, {r3, 1, {}}};
        if (rr::a_e3(J) > 0)
            detail::push_row(rows, J, "(2, 3, " + std::to_string(r3) + ")");
    }
    return rows;
}

// ===== candidates ===========================================================

struct Candidate {
    Basket J;
    long long a = 2;
    Rat E3;
    long long r = 1;
    std::string case_label;  // "2.0", "2.1.1", "2.1.2", "2.2", "2.3"
};

inline std::string case_label_for(long long a, const Basket& J) {
    if (a == 1) return "1";
    switch (rr::sum_v(J)) {
        case 0: return "2.3";
        case 1: return "2.2";
        case 2: return J.size() == 1 ? "2.1.1" : "2.1.2";
        case 3: return "2.0";
        default: throw consistency_error("case_label_for: sum v out of range");
    }
}

// Exclusion record for one admissible b-assignment of a d = 0 survivor.
struct ExclusionRecord {
    Basket J_with_b;
    long long a = 2;
    long long e = 1;
    Rat A1, A2;
    rr::C2Verdict verdict;
};

struct EnumerationResult {
    int d = 0;
    // d = 0 only: survivors of the closed-form constraints, before the
    // E.c2 consistency test.
    std::vector<Candidate> pre_exclusion;
    std::vector<ExclusionRecord> exclusions;
    std::vector<Candidate> candidates;
    std::vector<std::string> parametric;  // unbounded families, described
};

namespace detail {

// Admissible a for a basket: a >= 2, a | r * aE3, gcd(a, r_Q) = 1.
inline std::vector<long long> admissible_a(const Basket& J) {
    std::vector<long long> out;
    Rat raE3 = Rat(Int(J.lcm_index())) * rr::a_e3(J);
    if (!is_integer(raE3) || raE3 <= 0) return out;
    long long n = static_cast<long long>(rat_num(raE3));
    for (long long a = 2; a <= n; ++a) {
        if (n % a != 0) continue;
        bool coprime = true;
        for (const auto& p : J.points) coprime = coprime && gcd_ll(a, p.r) == 1;
        if (coprime) out.push_back(a);
    }
    return out;
}

inline Candidate make_candidate(const Basket& J, long long a) {
    Candidate c;
    c.J = J;
    c.a = a;
    c.r = J.lcm_index();
    c.E3 = rr::a_e3(J) / a;
    c.case_label = case_label_for(a, J);
    return c;
}

inline void sort_candidates(std::vector<Candidate>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Candidate& x, const Candidate& y) {
        if (x.J.size() != y.J.size()) return x.J.size() < y.J.size();
        if (!(x.J == y.J)) return x.J < y.J;
        return x.a < y.a;
    });
    cs.erase(std::unique(cs.begin(), cs.end(),
                         [](const Candidate& x, const Candidate& y) {
                             return x.J == y.J && x.a == y.a;
                         }),
             cs.end());
}

// All b in [1, r) coprime to r whose normalized residue min(eb~, r-eb~) is v.
inline std::vector<long long> admissible_b(long long r, long long v, long long e) {
    std::vector<long long> out;
    for (long long b = 1; b < r; ++b) {
        if (gcd_ll(b, r) != 1) continue;
        long long w = smallest_residue(e * b, r);
        if (std::min(w, r - w) == v) out.push_back(b);
    }
    return out;
}

}  // namespace detail

// Enumerate candidates at defect d in {0,1,2,3}. Unbounded families are
// materialized up to r_bound and described parametrically; the d = 0 case
// is finite and closed-form (no r_bound needed).
inline EnumerationResult enumerate_candidates(int d, long long r_bound = 64) {
    if (d < 0 || d > 3) throw std::invalid_argument("enumerate_candidates: d in {0,1,2,3}");
    EnumerationResult res;
    res.d = d;

    if (d == 3) {
        // Empty basket: rE^3 = 2/a forces a = 2; the smooth-point record.
        res.candidates.push_back(detail::make_candidate(Basket{}, 2));
        return res;
    }

    if (d == 2) {
        // J = {(r,1)}: aE^3 = (r+1)/r, so a | r+1 (coprimality is automatic).
        res.parametric.push_back("{(r,1)} with a >= 2, a | r+1; materialized for r <= " +
                                 std::to_string(r_bound));
        for (long long r = 2; r <= r_bound; ++r) {
            Basket J{{r, 1, {}}};
            for (long long a : detail::admissible_a(J))
                res.candidates.push_back(detail::make_candidate(J, a));
        }
        detail::sort_candidates(res.candidates);
        return res;
    }

    if (d == 1) {
        // J = {(r,2)}: aE^3 = 4/r, rE^3 = 4/a, so a in {2,4}; r odd >= 5.
        res.parametric.push_back("{(r,2)} with r odd >= 5 and a in {2,4}; materialized for r <= " +
                                 std::to_string(r_bound));
        for (long long r = 5; r <= r_bound; r += 2) {
            Basket J{{r, 2, {}}};
            for (long long a : detail::admissible_a(J))
                res.candidates.push_back(detail::make_candidate(J, a));
        }
        // J = {(r1,1),(r2,1)}: rE^3 = (r1+r2)/(a gcd(r1,r2)).
        res.parametric.push_back(
            "{(r1,1),(r2,1)} with a*gcd(r1,r2) | r1+r2, 2a <= r1+r2; materialized for r2 <= " +
            std::to_string(r_bound));
        for (long long r1 = 2; r1 <= r_bound; ++r1)
            for (long long r2 = r1; r2 <= r_bound; ++r2) {
                Basket J{{r1, 1, {}}, {r2, 1, {}}};
                for (long long a : detail::admissible_a(J))
                    res.candidates.push_back(detail::make_candidate(J, a));
            }
        detail::sort_candidates(res.candidates);
        return res;
    }

    // d = 0: finite. Proof-table shapes, then the full candidate constraints.
    // The (2,2,r3) family admits no a at all: for odd r3, rE^3 = 2/a forces
    // a = 2 which shares a factor with r_Q = 2; for even r3, rE^3 = 1/a has
    // no solution with a >= 2. So the parametric row contributes nothing.
    for (const auto& row : proof_table()) {
        if (row.parametric) continue;
        for (long long a : detail::admissible_a(row.J))
            res.pre_exclusion.push_back(detail::make_candidate(row.J, a));
    }
    detail::sort_candidates(res.pre_exclusion);

    for (const auto& cand : res.pre_exclusion) {
        long long e = *mod_inverse(cand.a, cand.r);
        // Every admissible b-assignment must contradict for the candidate
        // to be excluded; A_i is invariant under b -> r-b, so assignments
        // in one class agree, but we enumerate them all regardless.
        std::vector<std::vector<long long>> choices;
        for (const auto& p : cand.J.points)
            choices.push_back(detail::admissible_b(p.r, p.v, e));
        std::vector<std::size_t> idx(choices.size(), 0);
        bool all_contradict = true;
        while (true) {
            Basket Jb = cand.J;
            for (std::size_t k = 0; k < idx.size(); ++k) Jb.points[k].b = choices[k][idx[k]];
            ExclusionRecord rec;
            rec.J_with_b = Jb;
            rec.a = cand.a;
            rec.e = e;
            rec.A1 = rr::a_i_correction(1, e, Jb);
            rec.A2 = rr::a_i_correction(2, e, Jb);
            rec.verdict = rr::exclude_by_c2(Jb, cand.a, e, cand.E3);
            all_contradict = all_contradict && rec.verdict.contradiction;
            res.exclusions.push_back(std::move(rec));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
        if (!all_contradict) res.candidates.push_back(cand);
    }
    detail::sort_candidates(res.candidates);
    return res;
}

// ===== bounds for two-point baskets =========================================

// For case-2.1.2/2.2 pairs (with (r1, r2) = (1, r) in case 2.2): any special
// surface has type >= r1+r2-1, and a(r1 r2 E^3) = r1+r2 with 2a <= r1+r2,
// a != r1+r2.
struct Case212Bounds {
    long long r1 = 1, r2 = 1;
    long long min_special_type = 1;  // r1 + r2 - 1

    bool admits(long long a) const { return 2 * a <= r1 + r2 && a != r1 + r2; }
    Rat a_max() const { return Rat(Int(r1 + r2), Int(2)); }
};

inline Case212Bounds case_212_bounds(long long r1, long long r2) {
    if (r1 < 1 || r2 < 1) throw std::invalid_argument("case_212_bounds: indices must be >= 1");
    Case212Bounds b;
    b.r1 = r1;
    b.r2 = r2;
    b.min_special_type = r1 + r2 - 1;
    return b;
}

}  // namespace ca1::baskets
