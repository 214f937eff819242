// Weighted blow-up engine for hypersurface germs {f = 0} in C^4 with
// f = xy + z^2 + c w^K and its chart descendants: toric charts, strict
// transforms, discrepancy, E^3, exceptional locus, and the singularity
// inventory with terminality verdicts.
//
// Chart i of the blow-up with weights (w1,...,w4) is C^4 / Z_{w_i} with
// action (-w1,...,+1 at i,...,-w4); the covering map sends x_j to u_j u_i^{w_j}
// (j != i) and x_i to u_i^{w_i}. Pulling f back factors exactly as
// u_i^{wt(f)} times the strict transform, and E is cut by u_i.

#pragma once

#include <ca1/action.hpp>
#include <ca1/basket.hpp>
#include <ca1/numeric.hpp>
#include <ca1/poly.hpp>
#include <ca1/rr.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace ca1::wbl {

// ===== numerical invariants =================================================

// Minimal weighted degree of f: min over terms of exponent . w.
inline long long weighted_multiplicity(const WeightVec4& w, const MonoPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("weighted_multiplicity: zero polynomial");
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        long long d = w.dot(e);
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

// Adjunction for the hypersurface under the toric blow-up:
// a = (w1+w2+w3+w4) - wt(f) - 1.
inline long long discrepancy(const WeightVec4& w, const MonoPoly& f) {
    return w.sum() - weighted_multiplicity(w, f) - 1;
}

inline Rat e_cubed(const WeightVec4& w, const MonoPoly& f) {
    return Rat(Int(weighted_multiplicity(w, f)), Int(w.product()));
}

// ===== charts ===============================================================

struct Chart {
    int index = 1;  // 1..4
    CyclicAction action;        // on the four chart coordinates
    MonoPoly strict_transform;  // pulled-back f divided exactly by u_i^{wt(f)}
    int exceptional_coordinate = 1;  // the chart coordinate cutting E (= index)
};

inline std::array<Chart, 4> charts(const WeightVec4& w, const MonoPoly& f) {
    long long wtf = weighted_multiplicity(w, f);
    std::array<Chart, 4> out;
    for (int i = 0; i < 4; ++i) {
        Chart ch;
        ch.index = i + 1;
        ch.exceptional_coordinate = i + 1;
        std::vector<long long> act(4);
        for (int k = 0; k < 4; ++k) act[k] = k == i ? 1 : -w[k];
        ch.action = CyclicAction(w[static_cast<std::size_t>(i)], std::move(act));
        for (const auto& [e, c] : f.terms()) {
            Exponent4 ne = e;
            ne[i] = w.dot(e) - wtf;
            if (ne[i] < 0) throw consistency_error("charts: inexact division by u_i^{wt(f)}");
            ch.strict_transform.add_term(ne, c);
        }
        out[i] = std::move(ch);
    }
    return out;
}

// ===== exceptional locus ====================================================

enum class Irreducibility { irreducible, unknown };

// Sum of minimal-weight terms of f, with an irreducibility verdict from the
// quadratic rank in (x,y,z): rank >= 3, or rank 2 plus a pure w-power term,
// certifies irreducibility; anything else is reported unknown.
inline std::pair<MonoPoly, Irreducibility> exceptional_part(const WeightVec4& w,
                                                            const MonoPoly& f) {
    long long wtf = weighted_multiplicity(w, f);
    MonoPoly part;
    for (const auto& [e, c] : f.terms())
        if (w.dot(e) == wtf) part.add_term(e, c);

    // Quadratic form in (x,y,z): terms with e4 = 0 and total degree 2.
    Rat m[3][3] = {};
    for (const auto& [e, c] : part.terms()) {
        if (e[3] != 0 || e[0] + e[1] + e[2] != 2) continue;
        int vars[2], n = 0;
        for (int k = 0; k < 3; ++k)
            for (long long t = 0; t < e[k]; ++t) vars[n++] = k;
        if (vars[0] == vars[1]) m[vars[0]][vars[0]] += Rat(c);
        else {
            m[vars[0]][vars[1]] += Rat(c) / 2;
            m[vars[1]][vars[0]] += Rat(c) / 2;
        }
    }
    int rank = 0;
    for (int col = 0, row = 0; col < 3 && row < 3; ++col) {
        int piv = -1;
        for (int k = row; k < 3; ++k)
            if (m[k][col] != 0) { piv = k; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        for (int k = 0; k < 3; ++k) {
            if (k == row || m[k][col] == 0) continue;
            Rat fct = m[k][col] / m[row][col];
            for (int c2 = 0; c2 < 3; ++c2) m[k][c2] -= fct * m[row][c2];
        }
        ++row;
        ++rank;
    }

    bool w_power = false;
    for (const auto& [e, c] : part.terms())
        w_power = w_power || (e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] >= 1);

    Irreducibility verdict =
        (rank >= 3 || (rank == 2 && w_power)) ? Irreducibility::irreducible
                                              : Irreducibility::unknown;
    return {std::move(part), verdict};
}

// ===== discrepancy certificates =============================================

// A monomial valuation with nonpositive discrepancy over a quotient
// hypersurface germ: v = numerators / index lies in Z^4 + Z.(q/r), and
// d(v) = sum v_i - min_terms(v . exponent) - 1 <= 0.
struct ValuationCertificate {
    long long index = 1;
    std::array<long long, 4> numerators{};
    Rat d;
};

inline Rat certificate_discrepancy(const MonoPoly& g, long long index,
                                   const std::array<long long, 4>& num) {
    Rat sum = Rat(Int(num[0] + num[1] + num[2] + num[3]), Int(index));
    Rat wv;
    bool first = true;
    for (const auto& [e, c] : g.terms()) {
        Rat d = Rat(Int(e[0] * num[0] + e[1] * num[1] + e[2] * num[2] + e[3] * num[3]),
                    Int(index));
        if (first || d < wv) wv = d;
        first = false;
    }
    return sum - wv - 1;
}

// Enumerate primitive positive vectors of the extended lattice with entries
// <= search_bound, ordered by numerator sum then lexicographically, and
// return the first with d(v) <= 0. A certificate is sound; absence is NOT a
// terminality proof.
inline std::optional<ValuationCertificate> discrepancy_certificate(const MonoPoly& g,
                                                                   const CyclicAction& q,
                                                                   long long search_bound = 4) {
    if (g.is_zero()) throw std::invalid_argument("discrepancy_certificate: zero germ");
    if (q.weights.size() != 4)
        throw std::invalid_argument("discrepancy_certificate: expects a 4-weight action");
    if (search_bound < 1) throw std::invalid_argument("discrepancy_certificate: bound >= 1");
    long long r = q.r;

    // Residue classes hit by multiples of the action vector.
    std::vector<std::array<long long, 4>> classes;
    for (long long k = 0; k < r; ++k) {
        std::array<long long, 4> cls;
        for (int j = 0; j < 4; ++j) cls[j] = smallest_residue(k * q.weights[j], r);
        if (std::find(classes.begin(), classes.end(), cls) == classes.end())
            classes.push_back(cls);
    }
    auto in_lattice = [&](const std::array<long long, 4>& u) {
        std::array<long long, 4> cls;
        for (int j = 0; j < 4; ++j) cls[j] = smallest_residue(u[j], r);
        return std::find(classes.begin(), classes.end(), cls) != classes.end();
    };

    // Walk each residue class k.q + rZ^4 over its positive entries <= cap.
    std::vector<std::array<long long, 4>> members;
    long long cap = search_bound * r;
    for (const auto& cls : classes) {
        std::array<long long, 4> lo;
        for (int j = 0; j < 4; ++j) lo[j] = cls[j] > 0 ? cls[j] : r;
        for (long long u0 = lo[0]; u0 <= cap; u0 += r)
            for (long long u1 = lo[1]; u1 <= cap; u1 += r)
                for (long long u2 = lo[2]; u2 <= cap; u2 += r)
                    for (long long u3 = lo[3]; u3 <= cap; u3 += r) {
                        std::array<long long, 4> u{u0, u1, u2, u3};
                        long long g4 = gcd_ll(gcd_ll(u0, u1), gcd_ll(u2, u3));
                        if (g4 > 1) {
                            std::array<long long, 4> v{u0 / g4, u1 / g4, u2 / g4, u3 / g4};
                            if (in_lattice(v)) continue;  // not primitive in the lattice
                        }
                        members.push_back(u);
                    }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::sort(members.begin(), members.end(),
              [](const std::array<long long, 4>& x, const std::array<long long, 4>& y) {
                  long long sx = x[0] + x[1] + x[2] + x[3];
                  long long sy = y[0] + y[1] + y[2] + y[3];
                  if (sx != sy) return sx < sy;
                  return x < y;
              });

    for (const auto& u : members) {
        Rat d = certificate_discrepancy(g, r, u);
        if (d <= 0) {
            ValuationCertificate cert;
            cert.index = r;
            cert.numerators = u;
            cert.d = d;
            return cert;
        }
    }
    return std::nullopt;
}

// ===== singularity reports ==================================================

enum class Verdict { terminal, non_terminal, unknown };

struct Certificate {
    enum class Type { none, reid_tai_witness, valuation, singular_locus };
    Type type = Type::none;
    long long rt_k = 0;  // group element failing the Reid-Tai bound
    std::optional<ValuationCertificate> valuation;
    std::string locus;   // description of a positive-dimensional singular locus
};

struct SingularityReport {
    enum class Where { chart_origin, axis_curve, off_origin_locus };
    enum class Kind { smooth, quotient, cA, hypersurface_quotient };

    Where where = Where::chart_origin;
    int chart = 1;            // chart index 1..4
    int axis = 0;             // partner coordinate (1..4) for axis curves
    Kind kind = Kind::smooth;
    CyclicAction quotient;    // effective 3-weight action (kind == quotient)
    long long cA_exponent = -1;  // K in a germ u u + u^2 + u^K (kind == cA)
    MonoPoly germ;               // kind == cA or hypersurface_quotient
    CyclicAction germ_action;    // kind == hypersurface_quotient
    Verdict verdict = Verdict::unknown;
    Certificate certificate;
    std::string note;
};

struct BlowupAnalysis {
    WeightVec4 w;
    long long N = 2;
    long long a = 1;
    Rat E3;
    MonoPoly exceptional;
    Irreducibility exceptional_irreducible = Irreducibility::unknown;
    std::vector<SingularityReport> reports;
    Verdict overall = Verdict::unknown;
};

namespace detail {

inline SingularityReport origin_report(int chart_index, const Chart& ch, long long cert_bound) {
    const MonoPoly& g = ch.strict_transform;
    SingularityReport rep;
    rep.where = SingularityReport::Where::chart_origin;
    rep.chart = chart_index;

    // Smooth cover: a pure linear term with nonzero coefficient. Every term
    // of g carries the same action character, so when several linear
    // coordinates appear the residual actions after dropping any of them are
    // isomorphic; we drop the first.
    int linear = -1;
    for (int j = 0; j < 4 && linear < 0; ++j)
        if (g.linear_coefficient(static_cast<std::size_t>(j)) != 0) linear = j;

    if (linear >= 0) {
        CyclicAction residual =
            ch.action.drop(static_cast<std::size_t>(linear)).effective();
        if (residual.is_trivial()) {
            rep.kind = SingularityReport::Kind::smooth;
            rep.verdict = Verdict::terminal;
            return rep;
        }
        rep.kind = SingularityReport::Kind::quotient;
        rep.quotient = residual;
        if (auto k = reid_tai_witness(residual)) {
            rep.verdict = Verdict::non_terminal;
            rep.certificate.type = Certificate::Type::reid_tai_witness;
            rep.certificate.rt_k = *k;
        } else {
            rep.verdict = Verdict::terminal;
        }
        return rep;
    }

    // Singular point of the cover at the origin.
    CyclicAction eff = ch.action.effective();
    if (eff.is_trivial()) {
        // Gorenstein chart point. The supported germ shape is
        // c1 u_p u_q + c2 u_s^2 + c3 u_t^K with {p,q,s,t} all distinct:
        // an isolated cA point, hence terminal. Without the fourth
        // variable in the support the singular locus contains its whole
        // axis and the point is not terminal.
        int mixed_p = -1, mixed_q = -1, square_s = -1, power_t = -1;
        long long power_K = 0;
        bool shape_ok = g.term_count() <= 3;
        for (const auto& [e, c] : g.terms()) {
            int support[4], n = 0;
            long long deg = 0;
            for (int k = 0; k < 4; ++k) {
                if (e[k] > 0) support[n++] = k;
                deg += e[k];
            }
            if (n == 2 && deg == 2 && mixed_p < 0) {
                mixed_p = support[0];
                mixed_q = support[1];
            } else if (n == 1 && deg == 2 && square_s < 0) {
                square_s = support[0];
            } else if (n == 1 && deg >= 2 && power_t < 0) {
                power_t = support[0];
                power_K = e[static_cast<std::size_t>(support[0])];
            } else {
                shape_ok = false;
            }
        }
        shape_ok = shape_ok && mixed_p >= 0 && square_s >= 0 && mixed_p != square_s &&
                   mixed_q != square_s;
        if (!shape_ok) {
            rep.kind = SingularityReport::Kind::cA;
            rep.germ = g;
            rep.verdict = Verdict::unknown;
            rep.note = "unsupported germ shape at chart origin";
            return rep;
        }
        rep.kind = SingularityReport::Kind::cA;
        rep.germ = g;
        bool distinct = power_t >= 0 && power_t != mixed_p && power_t != mixed_q &&
                        power_t != square_s;
        if (distinct) {
            rep.cA_exponent = power_K;  // isolated, cA_{K-1}
            rep.verdict = Verdict::terminal;
        } else {
            // Some coordinate axis misses the support entirely: the germ is
            // singular along it.
            int missing = -1;
            for (int k = 0; k < 4 && missing < 0; ++k) {
                bool used = k == mixed_p || k == mixed_q || k == square_s || k == power_t;
                if (!used) missing = k;
            }
            rep.verdict = Verdict::non_terminal;
            rep.certificate.type = Certificate::Type::singular_locus;
            rep.certificate.locus = "strict transform singular along chart-" +
                                    std::to_string(chart_index) + " axis u" +
                                    std::to_string(missing + 1);
        }
        return rep;
    }

    // Singular cover point with a nontrivial action: search for a monomial
    // valuation of nonpositive discrepancy.
    rep.kind = SingularityReport::Kind::hypersurface_quotient;
    rep.germ = g;
    rep.germ_action = eff;
    if (auto cert = discrepancy_certificate(g, eff, cert_bound)) {
        rep.verdict = Verdict::non_terminal;
        rep.certificate.type = Certificate::Type::valuation;
        rep.certificate.valuation = cert;
    } else {
        rep.verdict = Verdict::unknown;
        rep.note = "no valuation of discrepancy <= 0 found up to the search bound; "
                   "absence is not a terminality proof";
    }
    return rep;
}

// Generic-point analysis of the exceptional axis curve shared by charts i
// and j (the u_j-axis of chart i). Returns a report only when the curve
// forces non-terminality.
inline std::optional<SingularityReport> axis_report(int i, int j, const Chart& ch) {
    const MonoPoly& g = ch.strict_transform;
    auto uj = static_cast<std::size_t>(j);
    if (!g.vanishes_on_axis(uj)) return std::nullopt;  // curve not on the strict transform

    SingularityReport rep;
    rep.where = SingularityReport::Where::axis_curve;
    rep.chart = i + 1;
    rep.axis = j + 1;

    // Hypersurface singular along the whole axis?
    bool all_partials_vanish = true;
    int smooth_dir = -1;
    for (int k = 0; k < 4; ++k) {
        if (k == static_cast<int>(uj)) continue;  // d/du_j restricts to zero anyway
        if (!g.partial(static_cast<std::size_t>(k)).vanishes_on_axis(uj)) {
            all_partials_vanish = false;
            if (smooth_dir < 0) smooth_dir = k;
        }
    }
    if (all_partials_vanish) {
        if (ch.action.effective().is_trivial()) {
            rep.kind = SingularityReport::Kind::cA;
        } else {
            rep.kind = SingularityReport::Kind::hypersurface_quotient;
            rep.germ_action = ch.action.effective();
        }
        rep.germ = g;
        rep.verdict = Verdict::non_terminal;
        rep.certificate.type = Certificate::Type::singular_locus;
        rep.certificate.locus = "strict transform singular along the exceptional axis {" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
        return rep;
    }

    // Stabilizer of a generic axis point: order d = gcd(r, action weight of
    // u_j), generated by r/d. It fixes the axis pointwise; if it acts
    // nontrivially on the 2-dimensional slice of the (smooth) strict
    // transform, the image has quotient singularities along the curve.
    long long r = ch.action.r;
    long long d = gcd_ll(r, ch.action.weights[uj]);
    if (d <= 1) return std::nullopt;
    long long gen = r / d;
    bool slice_nontrivial = false;
    for (int k = 0; k < 4; ++k) {
        if (k == static_cast<int>(uj) || k == smooth_dir) continue;
        if (smallest_residue(gen * ch.action.weights[static_cast<std::size_t>(k)], r) != 0)
            slice_nontrivial = true;
    }
    if (!slice_nontrivial) return std::nullopt;

    rep.kind = SingularityReport::Kind::quotient;
    std::vector<long long> slice;
    for (int k = 0; k < 4; ++k)
        if (k != static_cast<int>(uj) && k != smooth_dir)
            slice.push_back(ch.action.weights[static_cast<std::size_t>(k)] * gen);
    slice.push_back(0);  // the axis direction itself, fixed
    rep.quotient = CyclicAction(r, std::move(slice)).effective();
    rep.verdict = Verdict::non_terminal;
    rep.certificate.type = Certificate::Type::singular_locus;
    rep.certificate.locus = "stabilizer of order " + std::to_string(d) +
                            " acts on the transverse slice along exceptional axis {" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
    return rep;
}

}  // namespace detail

// Full singularity inventory of the weighted blow-up of xy + z^2 + w^N.
// Chart origins are classified directly; exceptional axis curves are
// checked at their generic points. For the binomial-plus-power family every
// non-smooth point of the blown-up space on E lies on that set (the strict
// transforms are of shape unit.u + q(rest) or xy + z^2 + w-power); a
// randomized Jacobian spot check guards the claim in the test suite.
inline BlowupAnalysis analyze(const WeightVec4& w, long long N, long long cert_bound = 4) {
    MonoPoly f = MonoPoly::ca1_germ(N);
    BlowupAnalysis out;
    out.w = w;
    out.N = N;
    out.a = discrepancy(w, f);
    out.E3 = e_cubed(w, f);
    auto [exc, irr] = exceptional_part(w, f);
    out.exceptional = std::move(exc);
    out.exceptional_irreducible = irr;

    auto chs = charts(w, f);
    for (int i = 0; i < 4; ++i) {
        if (chs[i].strict_transform.constant_term() != 0) continue;  // origin not on Y'
        out.reports.push_back(detail::origin_report(i + 1, chs[i], cert_bound));
    }
    // Axis curves, one report per unordered chart pair {i,j}; the curve is
    // computed in the lower-index chart (its generic points lie in both).
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (auto rep = detail::axis_report(i, j, chs[i])) out.reports.push_back(*rep);

    bool any_nonterminal = false, any_unknown = false;
    for (const auto& rep : out.reports) {
        any_nonterminal = any_nonterminal || rep.verdict == Verdict::non_terminal;
        any_unknown = any_unknown || rep.verdict == Verdict::unknown;
    }
    if (any_nonterminal) out.overall = Verdict::non_terminal;
    else if (any_unknown || out.exceptional_irreducible != Irreducibility::irreducible)
        out.overall = Verdict::unknown;
    else out.overall = Verdict::terminal;
    return out;
}

// ===== basket extraction ====================================================

struct BasketData {
    Basket J;        // with b present on every point
    long long a = 1;
    long long r = 1;
    long long e = 0;
};

// Collect the quotient points of a terminal analysis into a basket:
// normalize each to 1/r(1,-1,b), set v = e b mod r normalized to <= r/2
// (flipping b to r-b as needed), with e the inverse of a modulo the global
// index.
inline BasketData basket_of(const WeightVec4& w, long long N) {
    BlowupAnalysis an = analyze(w, N);
    if (an.overall != Verdict::terminal)
        throw std::invalid_argument("basket_of: analysis verdict is not terminal for " +
                                    w.str() + ", N=" + std::to_string(N));
    BasketData out;
    out.a = an.a;
    std::vector<std::pair<long long, long long>> raw;  // (r, b)
    for (const auto& rep : an.reports) {
        if (rep.kind != SingularityReport::Kind::quotient) continue;
        auto nb = normalize_quotient(rep.quotient);
        if (!nb)
            throw consistency_error("basket_of: terminal quotient " + rep.quotient.str() +
                                    " has no 1/r(1,-1,b) form");
        if (nb->first > 1) raw.push_back(*nb);
    }
    out.r = 1;
    for (auto& [rq, bq] : raw) out.r = lcm_ll(out.r, rq);
    auto e = mod_inverse(out.a, out.r);
    if (!e) throw consistency_error("basket_of: discrepancy not coprime to the global index");
    out.e = *e;
    for (auto& [rq, bq] : raw) {
        long long v = smallest_residue(out.e * bq, rq);
        long long b = bq;
        if (2 * v > rq) {
            v = rq - v;
            b = rq - b;
        }
        out.J.points.push_back(FictitiousPoint{rq, v, b});
    }
    out.J.canonicalize();
    out.J.validate();
    return out;
}

}  // namespace ca1::wbl
