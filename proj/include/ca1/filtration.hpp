// Brute-force oracle on the coordinate ring of xy + z^2 + w^N: dimensions
// of the monomial-weight filtration quotients, their first differences, and
// the Du Val type of the special surfaces z + p(w) + c w^a = 0.
//
// The ring has the monomial basis {x^a z^b w^c} u {y^a z^b w^c, a >= 1}
// (normal forms for the rewriting xy -> -(z^2 + w^N)); the filtration level
// of a basis monomial is its weight. For weights with wt(xy) = wt(z^2) <=
// wt(w^N) -- every verified contraction -- this matches the pushforward
// ideals on the tested range; the Riemann-Roch cross-check guards it.

#pragma once

#include <ca1/numeric.hpp>
#include <ca1/poly.hpp>

#include <vector>

namespace ca1::filt {

struct CA1Ring {
    long long N = 2;
    explicit CA1Ring(long long n) : N(n) {
        if (N < 2) throw std::invalid_argument("CA1Ring: N must be >= 2");
    }
};

namespace detail {

// Number of basis monomials of weight < bound.
inline long long count_below(const WeightVec4& w, long long bound) {
    long long total = 0;
    // branch 0: x^a z^b w^c; branch 1: y^a z^b w^c with a >= 1.
    for (int branch = 0; branch < 2; ++branch) {
        long long wa = branch == 0 ? w[0] : w[1];
        for (long long a = branch; a * wa < bound; ++a)
            for (long long b = 0; a * wa + b * w[2] < bound; ++b) {
                long long rem = bound - a * wa - b * w[2];
                total += (rem + w[3] - 1) / w[3];  // # of c with c*w4 < rem
            }
    }
    return total;
}

}  // namespace detail

// Cumulative dimensions dim O / (weight >= i), i = 1..i_max. Values beyond
// the discrepancy are extrapolation; callers label them.
inline std::vector<long long> filtration_dims(const CA1Ring& ring, const WeightVec4& w,
                                              long long i_max) {
    (void)ring;  // the count does not depend on N once weights are fixed
    if (i_max < 1) throw std::invalid_argument("filtration_dims: i_max >= 1");
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(i_max));
    for (long long i = 1; i <= i_max; ++i) out.push_back(detail::count_below(w, i));
    return out;
}

// First differences N_i = dim(level i), i = 0..i_max-1. For the family
// weights (s, 2t-s, t, 1) the identity N_i = floor(i/s) + 1 holds on
// 0 <= i < t and is asserted.
inline std::vector<long long> graded_counts(const CA1Ring& ring, const WeightVec4& w,
                                            long long i_max) {
    auto dims = filtration_dims(ring, w, i_max + 1);
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(i_max));
    long long prev = 0;
    for (long long i = 0; i < i_max; ++i) {
        out.push_back(dims[static_cast<std::size_t>(i)] - prev);
        prev = dims[static_cast<std::size_t>(i)];
    }
    bool family_shape = w[3] == 1 && w[0] + w[1] == 2 * w[2] && w[0] <= w[2];
    if (family_shape) {
        long long s = w[0], t = w[2];
        for (long long i = 0; i < std::min(i_max, t); ++i)
            if (out[static_cast<std::size_t>(i)] != i / s + 1)
                throw consistency_error("graded_counts: N_i != floor(i/s)+1 at i=" +
                                        std::to_string(i) + " for weights " + w.str());
    }
    return out;
}

// ===== special-surface types ================================================

// Polynomial in w only, exact rational coefficients, index = degree.
struct WPoly {
    std::vector<Rat> coeffs;

    WPoly() = default;
    explicit WPoly(std::vector<Rat> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }

    Rat coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rat(0); }

    WPoly square() const {
        WPoly out;
        if (is_zero()) return out;
        out.coeffs.assign(2 * coeffs.size() - 1, Rat(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                out.coeffs[i + j] += coeffs[i] * coeffs[j];
        out.trim();
        return out;
    }

    WPoly plus_power(long long n) const {  // p + w^n
        WPoly out = *this;
        if (out.coeffs.size() <= static_cast<std::size_t>(n))
            out.coeffs.resize(static_cast<std::size_t>(n) + 1, Rat(0));
        out.coeffs[static_cast<std::size_t>(n)] += 1;
        out.trim();
        return out;
    }
};

// Order of vanishing in w; nullopt encodes +infinity (the zero polynomial).
inline std::optional<long long> ord_w(const WPoly& p) {
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        if (p.coeffs[k] != 0) return static_cast<long long>(k);
    return std::nullopt;
}

// A_s type of the surface xy + (p(w) + c w^a)^2 + w^N = 0 for general c:
// s = min{2a, a + ord p, ord(p^2 + w^N)} - 1. The perturbation p lives in
// the span of w^1..w^{a-1}; together with a >= 2 this forces s >= 1 and
// makes the bound s <= 2a-1 an equality exactly for p = 0, N >= 2a.
inline long long special_surface_type(long long a, const WPoly& p, long long N) {
    if (a < 2) throw std::invalid_argument("special_surface_type: a >= 2");
    if (N < 2) throw std::invalid_argument("special_surface_type: N >= 2");
    if (p.coeff(0) != 0)
        throw std::invalid_argument("special_surface_type: p must have zero constant term");
    if (static_cast<long long>(p.coeffs.size()) > a)
        throw std::invalid_argument("special_surface_type: deg p must be < a");
    long long best = 2 * a;
    if (auto op = ord_w(p)) best = std::min(best, a + *op);
    if (auto oq = ord_w(p.square().plus_power(N))) best = std::min(best, *oq);
    return best - 1;
}

}  // namespace ca1::filt
