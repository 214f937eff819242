// Diagonal cyclic group actions 1/r(a_1,...,a_k), the Reid-Tai terminality
// scan, and normalization of terminal quotients into the 1/r(1,-1,b) form.

#pragma once

#include <ca1/numeric.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace ca1 {

struct CyclicAction {
    long long r = 1;
    std::vector<long long> weights;  // residues stored in [0, r)

    CyclicAction() = default;
    CyclicAction(long long order, std::vector<long long> ws) : r(order), weights(std::move(ws)) {
        if (r < 1) throw std::invalid_argument("CyclicAction: order must be positive");
        for (auto& a : weights) a = smallest_residue(a, r);
    }

    bool is_trivial() const {
        if (r == 1) return true;
        return std::all_of(weights.begin(), weights.end(), [](long long a) { return a == 0; });
    }

    // Quotient by the kernel: if g = gcd(r, all weights) > 1 the subgroup of
    // order g acts trivially, and the effective action is 1/(r/g)(weights).
    CyclicAction effective() const {
        long long g = r;
        for (long long a : weights) g = gcd_ll(g, a);
        if (g == 1) return *this;
        return CyclicAction(r / g, weights);
    }

    CyclicAction drop(std::size_t idx) const {
        std::vector<long long> ws;
        for (std::size_t k = 0; k < weights.size(); ++k)
            if (k != idx) ws.push_back(weights[k]);
        return CyclicAction(r, std::move(ws));
    }

    // "1/5(-1,3,2)": residues above r/2 display as negative representatives.
    std::string str() const {
        std::ostringstream os;
        os << "1/" << r << '(';
        for (std::size_t k = 0; k < weights.size(); ++k) {
            if (k) os << ',';
            os << (2 * weights[k] > r ? weights[k] - r : weights[k]);
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const CyclicAction& x, const CyclicAction& y) {
        return x.r == y.r && x.weights == y.weights;
    }
    friend bool operator<(const CyclicAction& x, const CyclicAction& y) {
        if (x.r != y.r) return x.r < y.r;
        return x.weights < y.weights;
    }
};

// First k in 1..r-1 whose age sum fails the strict bound, i.e.
// sum_i (k a_i mod r) <= r; nullopt when every k passes.
inline std::optional<long long> reid_tai_witness(const CyclicAction& q) {
    for (long long k = 1; k < q.r; ++k) {
        long long s = 0;
        for (long long a : q.weights) s += smallest_residue(k * a, q.r);
        if (s <= q.r) return k;
    }
    return std::nullopt;
}

// Terminal iff every nontrivial group element has age sum > r. The scan is
// literal: non-faithful actions fail it (the kernel elements have sum 0);
// callers reduce to the effective action first when that is what they mean.
inline bool reid_tai(const CyclicAction& q) { return !reid_tai_witness(q).has_value(); }

// Search over unit rescalings and coordinate permutations of a 3-weight
// action for a representation (1, r-1, b) with gcd(b, r) = 1. Succeeds
// exactly on the terminal quotients; the returned b is the first hit of the
// deterministic scan (b and r-b give isomorphic types).
inline std::optional<std::pair<long long, long long>> normalize_quotient(const CyclicAction& q) {
    if (q.weights.size() != 3)
        throw std::invalid_argument("normalize_quotient: expects a 3-weight action");
    if (q.r == 1) return std::make_pair(1LL, 0LL);
    for (long long u = 1; u < q.r; ++u) {
        if (gcd_ll(u, q.r) != 1) continue;
        long long m[3];
        for (int k = 0; k < 3; ++k) m[k] = smallest_residue(u * q.weights[k], q.r);
        static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms) {
            if (m[p[0]] != 1 || m[p[1]] != q.r - 1) continue;
            long long b = m[p[2]];
            if (gcd_ll(b, q.r) == 1) return std::make_pair(q.r, b);
        }
    }
    return std::nullopt;
}

// Canonical representative under unit rescaling and permutation: the
// lexicographically smallest sorted weight tuple. Used to compare actions
// up to isomorphism.
inline CyclicAction canonical_action(const CyclicAction& q0) {
    CyclicAction q = q0.effective();
    std::vector<long long> best;
    for (long long u = 1; u < q.r || (q.r == 1 && u == 1); ++u) {
        if (gcd_ll(u, q.r) != 1) continue;
        std::vector<long long> m;
        m.reserve(q.weights.size());
        for (long long a : q.weights) m.push_back(smallest_residue(u * a, q.r));
        std::sort(m.begin(), m.end());
        if (best.empty() || m < best) best = std::move(m);
        if (q.r == 1) break;
    }
    if (best.empty()) best = q.weights;  // r = 1 with no loop iteration
    return CyclicAction(q.r, std::move(best));
}

inline bool actions_isomorphic(const CyclicAction& x, const CyclicAction& y) {
    return canonical_action(x) == canonical_action(y);
}

}  // namespace ca1
