// Integer-coefficient polynomials in four variables, stored as a sparse
// exponent-to-coefficient map, plus the weight vector driving blow-ups.
// The supported germs (xy + z^2 + c w^K and their chart descendants) keep
// coefficients small, so int64 coefficients suffice.

#pragma once

#include <ca1/numeric.hpp>

#include <array>
#include <map>
#include <sstream>
#include <vector>

namespace ca1 {

using Exponent4 = std::array<long long, 4>;

struct WeightVec4 {
    std::array<long long, 4> w{1, 1, 1, 1};

    WeightVec4() = default;
    WeightVec4(long long a, long long b, long long c, long long d) : w{a, b, c, d} { validate(); }
    explicit WeightVec4(std::array<long long, 4> v) : w(v) { validate(); }

    void validate() const {
        for (long long x : w)
            if (x < 1) throw std::invalid_argument("WeightVec4: weights must be positive");
    }

    long long operator[](std::size_t i) const { return w[i]; }
    long long sum() const { return w[0] + w[1] + w[2] + w[3]; }
    long long product() const { return w[0] * w[1] * w[2] * w[3]; }
    long long dot(const Exponent4& e) const {
        return e[0] * w[0] + e[1] * w[1] + e[2] * w[2] + e[3] * w[3];
    }
    WeightVec4 swapped_xy() const { return WeightVec4(w[1], w[0], w[2], w[3]); }

    std::string str() const {
        std::ostringstream os;
        os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ')';
        return os.str();
    }

    friend bool operator==(const WeightVec4& x, const WeightVec4& y) { return x.w == y.w; }
};

class MonoPoly {
public:
    using TermMap = std::map<Exponent4, long long>;

    MonoPoly() = default;

    static MonoPoly monomial(const Exponent4& e, long long c) {
        MonoPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    // The cA1 germ xy + z^2 + w^N.
    static MonoPoly ca1_germ(long long N) {
        if (N < 2) throw std::invalid_argument("ca1_germ: N must be >= 2");
        MonoPoly p;
        p.terms_[{1, 1, 0, 0}] = 1;
        p.terms_[{0, 0, 2, 0}] = 1;
        p.terms_[{0, 0, 0, N}] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponent4& e, long long c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    long long coefficient(const Exponent4& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    long long constant_term() const { return coefficient({0, 0, 0, 0}); }

    // Coefficient of the pure degree-1 monomial in variable j.
    long long linear_coefficient(std::size_t j) const {
        Exponent4 e{0, 0, 0, 0};
        e[j] = 1;
        return coefficient(e);
    }

    MonoPoly partial(std::size_t j) const {
        MonoPoly out;
        for (const auto& [e, c] : terms_) {
            if (e[j] == 0) continue;
            Exponent4 d = e;
            d[j] -= 1;
            out.add_term(d, c * e[j]);
        }
        return out;
    }

    // Restriction to the j-th coordinate axis: terms supported on variable j
    // only (constants included), as exponent -> coefficient.
    std::map<long long, long long> restrict_to_axis(std::size_t j) const {
        std::map<long long, long long> out;
        for (const auto& [e, c] : terms_) {
            bool pure = true;
            for (std::size_t k = 0; k < 4; ++k) pure = pure && (k == j || e[k] == 0);
            if (pure) out[e[j]] += c;
        }
        return out;
    }

    bool vanishes_on_axis(std::size_t j) const { return restrict_to_axis(j).empty(); }

    Rat evaluate(const std::array<Rat, 4>& x) const {
        Rat total(0);
        for (const auto& [e, c] : terms_) {
            Rat m(c);
            for (std::size_t k = 0; k < 4; ++k)
                for (long long p = 0; p < e[k]; ++p) m *= x[k];
            total += m;
        }
        return total;
    }

    std::string str(const std::array<const char*, 4>& names = {"x", "y", "z", "w"}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << '-';
            first = false;
            long long mag = c > 0 ? c : -c;
            bool any = false;
            if (mag != 1) {
                os << mag;
                any = true;
            }
            for (std::size_t k = 0; k < 4; ++k) {
                if (e[k] == 0) continue;
                if (any) os << '*';
                os << names[k];
                if (e[k] > 1) os << '^' << e[k];
                any = true;
            }
            if (!any) os << 1;
        }
        return os.str();
    }

    friend bool operator==(const MonoPoly& x, const MonoPoly& y) { return x.terms_ == y.terms_; }

private:
    TermMap terms_;
};

}  // namespace ca1
