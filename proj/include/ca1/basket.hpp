// Baskets of fictitious singularities: multisets of local data
// (r_Q, v_Q, optionally b_Q) feeding the singular Riemann-Roch formulas.
// A point of type 1/r(1,-1,b) enters as r_Q = r, v_Q = normalized e*b.

#pragma once

#include <ca1/numeric.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace ca1 {

struct FictitiousPoint {
    long long r = 2;                 // local index, >= 2
    long long v = 1;                 // 1 <= v, gcd(v, r) = 1, 2v <= r
    std::optional<long long> b;      // in [1, r), gcd(b, r) = 1 when present

    friend bool operator==(const FictitiousPoint& x, const FictitiousPoint& y) {
        return x.r == y.r && x.v == y.v && x.b == y.b;
    }
    friend bool operator<(const FictitiousPoint& x, const FictitiousPoint& y) {
        if (x.r != y.r) return x.r < y.r;
        if (x.v != y.v) return x.v < y.v;
        return x.b.value_or(0) < y.b.value_or(0);
    }
};

struct Basket {
    std::vector<FictitiousPoint> points;  // kept canonically sorted

    Basket() = default;
    Basket(std::initializer_list<FictitiousPoint> pts) : points(pts) { canonicalize(); }

    void canonicalize() { std::sort(points.begin(), points.end()); }

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }

    void validate() const {
        for (const auto& p : points) {
            if (p.r < 2) throw std::invalid_argument("basket: local index r must be >= 2");
            if (p.v < 1 || 2 * p.v > p.r)
                throw std::invalid_argument("basket: v out of range [1, r/2]");
            if (gcd_ll(p.v, p.r) != 1)
                throw std::invalid_argument("basket: v and r must be coprime");
            if (p.b && (*p.b < 1 || *p.b >= p.r || gcd_ll(*p.b, p.r) != 1))
                throw std::invalid_argument("basket: b must lie in [1, r) and be coprime to r");
        }
    }

    bool has_b() const {
        return std::all_of(points.begin(), points.end(),
                           [](const FictitiousPoint& p) { return p.b.has_value(); });
    }

    // Global index: lcm of local indices, 1 for the empty basket.
    long long lcm_index() const {
        long long r = 1;
        for (const auto& p : points) r = lcm_ll(r, p.r);
        return r;
    }

    // "{(2,1),(5,2)}" -- b is not part of the display.
    std::string str() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (k) os << ',';
            os << '(' << points[k].r << ',' << points[k].v << ')';
        }
        os << '}';
        return os.str();
    }

    // Parse "r:v,r:v,..."; empty string is the empty basket.
    static Basket parse(std::string_view text) {
        Basket out;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos);
            std::size_t colon = item.find(':');
            if (colon == std::string_view::npos)
                throw std::invalid_argument("basket: expected r:v items separated by commas");
            FictitiousPoint p;
            p.r = std::stoll(std::string(item.substr(0, colon)));
            p.v = std::stoll(std::string(item.substr(colon + 1)));
            out.points.push_back(p);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        out.canonicalize();
        out.validate();
        return out;
    }

    friend bool operator==(const Basket& x, const Basket& y) { return x.points == y.points; }
    friend bool operator<(const Basket& x, const Basket& y) { return x.points < y.points; }
};

}  // namespace ca1
