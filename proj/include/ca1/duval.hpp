// Exact intersection numbers on partial resolutions of Du Val A_s points.
// The minimal resolution is a chain of s (-2)-curves F_1..F_s; a partial
// resolution contracts a subset of them, and pullback coefficients are
// solved from the chain intersection matrix (the negated A_s Cartan matrix).

#pragma once

#include <ca1/numeric.hpp>

#include <map>
#include <vector>

namespace ca1::duval {

struct ChainConfig {
    long long s = 1;                   // chain length, >= 1
    std::vector<bool> contracted;      // size s; contracted[i] for node i+1

    ChainConfig(long long len, std::vector<bool> c) : s(len), contracted(std::move(c)) {
        validate();
    }
    static ChainConfig from_mask(long long len, unsigned long long mask) {
        std::vector<bool> c(static_cast<std::size_t>(len));
        for (long long i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        return ChainConfig(len, std::move(c));
    }

    void validate() const {
        if (s < 1) throw std::invalid_argument("ChainConfig: s >= 1");
        if (static_cast<long long>(contracted.size()) != s)
            throw std::invalid_argument("ChainConfig: flag vector must have length s");
        bool any_kept = false;
        for (bool c : contracted) any_kept = any_kept || !c;
        if (!any_kept)
            throw std::invalid_argument("ChainConfig: at least one node must survive");
    }

    bool is_contracted(long long node) const {  // 1-based
        return contracted[static_cast<std::size_t>(node - 1)];
    }
};

// F_i . F_j on the chain: -2 on the diagonal, 1 for neighbours.
inline long long chain_dot(long long i, long long j) {
    if (i == j) return -2;
    return (i - j == 1 || j - i == 1) ? 1 : 0;
}

// Coefficients c_j of g^* F_k = F_k + sum_{j contracted} c_j F_j, solved
// from (g^* F_k . F_j) = 0 for every contracted j. The restricted matrix is
// negative definite, so the system is uniquely solvable.
inline std::map<long long, Rat> pullback_coeffs(const ChainConfig& cfg, long long k) {
    if (k < 1 || k > cfg.s) throw std::invalid_argument("pullback_coeffs: node out of range");
    if (cfg.is_contracted(k))
        throw std::invalid_argument("pullback_coeffs: node k must not be contracted");
    std::vector<long long> nodes;
    for (long long j = 1; j <= cfg.s; ++j)
        if (cfg.is_contracted(j)) nodes.push_back(j);
    const std::size_t n = nodes.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    std::vector<Rat> rhs(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) m[a][b] = Rat(chain_dot(nodes[a], nodes[b]));
        rhs[a] = Rat(-chain_dot(k, nodes[a]));
    }
    // Gaussian elimination with exact rationals.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw consistency_error("pullback_coeffs: singular chain system");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::map<long long, Rat> out;
    for (std::size_t a = 0; a < n; ++a) out[nodes[a]] = rhs[a] / m[a][a];
    return out;
}

// The general hyperplane section through the A_s point meets the chain at
// F_1 and F_s with multiplicity 1. Its two intersection points with the
// partial-resolution exceptional locus sit on A_{s1}, A_{s2} points, where
// s1, s2 count the contracted nodes at the two chain ends, and the local
// intersection numbers are 1/(s1+1), 1/(s2+1) -- computed here from the
// linear algebra, not assumed.
struct ResolutionProfile {
    long long s1 = 0, s2 = 0;
    Rat intersection1, intersection2;
    long long mult = 1;  // multiplicity of the section along every component
};

inline ResolutionProfile partial_resolution_profile(const ChainConfig& cfg) {
    ResolutionProfile out;
    while (out.s1 < cfg.s && cfg.is_contracted(out.s1 + 1)) ++out.s1;
    while (out.s2 < cfg.s && cfg.is_contracted(cfg.s - out.s2)) ++out.s2;
    out.intersection1 =
        out.s1 == 0 ? Rat(1) : pullback_coeffs(cfg, out.s1 + 1).at(1);
    out.intersection2 =
        out.s2 == 0 ? Rat(1) : pullback_coeffs(cfg, cfg.s - out.s2).at(cfg.s);
    out.mult = 1;
    return out;
}

// Match the two local intersection numbers 1/(s_i+1) against aE^3 =
// 1/r1 + 1/r2: the section points are A_{r1-1}, A_{r2-1} points and any
// special surface needs s >= r1 + r2 - 1.
struct IndexMatch {
    long long s_min = 1;
    long long type1 = 0, type2 = 0;  // A_{type1}, A_{type2}
};

inline IndexMatch match_indices(long long r1, long long r2) {
    if (r1 < 1 || r2 < 1 || r1 > r2)
        throw std::invalid_argument("match_indices: need 1 <= r1 <= r2");
    IndexMatch out;
    out.s_min = r1 + r2 - 1;
    out.type1 = r1 - 1;
    out.type2 = r2 - 1;
    return out;
}

}  // namespace ca1::duval
