// Singular Riemann-Roch arithmetic on baskets:
//   aE^3        = 2 - sum_Q v(r - v)/r
//   dim O/(-iE) = i^2 - 1/2 sum_Q min_{0<=j<i} {(1+j)j r + i(i-1-2j) v}
//   sum_Q v_Q   = 3 - dim m/(-2E)
//   A_i         = sum_Q ( -ie~ (r^2-1)/(12r) + sum_{j=1}^{ie~-1} jb~ (r-jb~)/(2r) )
//   graded dim  = (1/12){2(3i^2-3i+1) - 3(2i-1)a + a^2} E^3 + E.c2/12 + A_i - A_{i-1}
// where ~ is the smallest residue modulo the local index. All evaluation is
// exact; integrality claims are checked, never rounded.

#pragma once

#include <ca1/basket.hpp>
#include <ca1/numeric.hpp>

namespace ca1::rr {

inline Rat a_e3(const Basket& J) {
    Rat total(2);
    for (const auto& p : J.points) total -= Rat(Int(p.v) * (p.r - p.v), Int(p.r));
    return total;
}

// dim O_X / f_* O_Y(-iE) for 1 <= i <= a. Throws consistency_error if the
// exact value is not a nonnegative integer.
inline long long dim_quotient(long long i, long long a, const Basket& J) {
    if (i < 1 || i > a) throw std::invalid_argument("dim_quotient: need 1 <= i <= a");
    Int correction = 0;
    for (const auto& p : J.points) {
        Int best;
        bool first = true;
        for (long long j = 0; j < i; ++j) {
            Int term = Int(1 + j) * j * p.r + Int(i) * (i - 1 - 2 * j) * p.v;
            if (first || term < best) {
                best = term;
                first = false;
            }
        }
        correction += best;
    }
    Rat dim = Rat(Int(i) * i) - Rat(correction, Int(2));
    if (!is_integer(dim) || dim < 0)
        throw consistency_error("dim_quotient: non-integral or negative value for basket " +
                                J.str());
    return static_cast<long long>(rat_num(dim));
}

inline long long sum_v(const Basket& J) {
    long long s = 0;
    for (const auto& p : J.points) s += p.v;
    return s;
}

// d = dim m_P / f_* O_Y(-2E) = 3 - sum v_Q; only d in {0,1,2,3} is admissible.
inline long long defect_from_sum_v(const Basket& J) {
    long long d = 3 - sum_v(J);
    if (d < 0)
        throw consistency_error("defect_from_sum_v: sum of v exceeds 3 for basket " + J.str());
    return d;
}

// The correction term A_i; every basket point must carry b.
inline Rat a_i_correction(long long i, long long e, const Basket& J) {
    if (i < 0) throw std::invalid_argument("a_i_correction: i must be >= 0");
    Rat total(0);
    for (const auto& p : J.points) {
        if (!p.b) throw std::invalid_argument("a_i_correction: basket point missing b");
        long long ie = smallest_residue(i * e, p.r);
        total -= Rat(Int(ie) * (Int(p.r) * p.r - 1), Int(12) * p.r);
        for (long long j = 1; j < ie; ++j) {
            long long jb = smallest_residue(j * *p.b, p.r);
            total += Rat(Int(jb) * (p.r - jb), Int(2) * p.r);
        }
    }
    return total;
}

struct RRContext {
    long long a = 1;        // discrepancy, K_Y = f^* K_X + aE
    long long r = 1;        // global index, lcm of local indices
    long long e = 0;        // ae = 1 mod r
    Rat E3;                 // E^3
    std::optional<Rat> Ec2; // E.c2(Y), when known

    static RRContext for_basket(const Basket& J, long long a, const Rat& E3,
                                std::optional<Rat> Ec2 = std::nullopt) {
        RRContext ctx;
        ctx.a = a;
        ctx.r = J.lcm_index();
        for (const auto& p : J.points)
            if (gcd_ll(a, p.r) != 1)
                throw std::invalid_argument("RRContext: a must be coprime to every local index");
        auto e = mod_inverse(a, ctx.r);
        if (!e) throw std::invalid_argument("RRContext: a has no inverse modulo the global index");
        ctx.e = *e;
        ctx.E3 = E3;
        ctx.Ec2 = std::move(Ec2);
        Rat rE3 = Rat(Int(ctx.r)) * E3;
        if (!is_integer(rE3) || rE3 <= 0)
            throw consistency_error("RRContext: r*E^3 is not a positive integer");
        return ctx;
    }
};

// The E^3-dependent part of the graded dimension.
inline Rat polynomial_part(long long i, long long a, const Rat& E3) {
    Int c = Int(2) * (3 * i * i - 3 * i + 1) - Int(3) * (2 * i - 1) * a + Int(a) * a;
    return Rat(c, Int(12)) * E3;
}

// dim f_*O_Y(iE)/f_*O_Y((i-1)E), valid for i <= a; requires Ec2.
inline Rat graded_dim(long long i, const RRContext& ctx, const Basket& J) {
    if (i > ctx.a) throw std::invalid_argument("graded_dim: formula valid only for i <= a");
    if (!ctx.Ec2) throw std::invalid_argument("graded_dim: Ec2 required");
    return polynomial_part(i, ctx.a, ctx.E3) + *ctx.Ec2 / 12 + a_i_correction(i, ctx.e, J) -
           a_i_correction(i - 1, ctx.e, J);
}

struct C2Verdict {
    bool contradiction = false;
    Rat ec2_i1;  // E.c2 solved from the i = 1 equation
    Rat ec2_i2;  // from i = 2 when a >= 2, otherwise equal to ec2_i1
};

// E is effective and exceptional, so the graded dimensions vanish for
// 1 <= i <= a; solving 0 = poly(i) + Ec2/12 + A_i - A_{i-1} at i = 1 and
// (when a >= 2) at i = 2 over-determines Ec2. Differing solutions exclude
// the basket.
inline C2Verdict exclude_by_c2(const Basket& J, long long a, long long e, const Rat& E3) {
    auto solve = [&](long long i) {
        return Rat(-12) * (polynomial_part(i, a, E3) + a_i_correction(i, e, J) -
                           a_i_correction(i - 1, e, J));
    };
    C2Verdict out;
    out.ec2_i1 = solve(1);
    out.ec2_i2 = a >= 2 ? solve(2) : out.ec2_i1;
    out.contradiction = out.ec2_i1 != out.ec2_i2;
    return out;
}

// Closed-form variant of dim m_P / f_* O_Y(-iE) on J = {(r,2)} baskets with
// a = 4, i in {3,4}: 3 + max(0, 6-r) and 4 + max(0, 8-r). Disagrees with
// dim_quotient by exactly one on its whole domain; both are kept and the
// gap is pinned by tests rather than resolved either way.
inline long long closed_form_dim_m_r2(long long i, long long r) {
    if (i == 3) return 3 + std::max<long long>(0, 6 - r);
    if (i == 4) return 4 + std::max<long long>(0, 8 - r);
    throw std::invalid_argument("closed_form_dim_m_r2: defined for i in {3,4} only");
}

}  // namespace ca1::rr
