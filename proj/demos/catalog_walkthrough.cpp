// Library walkthrough: classify the weighted blow-ups of xy + z^2 + w^6,
// inspect one member end to end, and show the exclusion step of the
// numerical game. Build target: demo_catalog_walkthrough.

#include <ca1/ca1.hpp>

#include <iostream>

int main() {
    using namespace ca1;

    std::cout << "catalog for N = 6\n";
    for (const auto& c : catalog::enumerate_contractions(6)) {
        std::cout << "  wt" << c.weights.str() << "  a=" << c.a << "  E^3=" << rat_str(c.E3)
                  << "  basket " << c.basket.str() << "\n";
    }

    std::cout << "\none member in detail: wt(2,4,3,1)\n";
    auto an = wbl::analyze(WeightVec4(2, 4, 3, 1), 6);
    std::cout << "  exceptional locus: " << an.exceptional.str() << "\n";
    for (const auto& rep : an.reports) {
        std::cout << "  chart " << rep.chart << ": ";
        switch (rep.kind) {
            case wbl::SingularityReport::Kind::smooth: std::cout << "smooth point"; break;
            case wbl::SingularityReport::Kind::quotient:
                std::cout << "quotient " << rep.quotient.str();
                break;
            case wbl::SingularityReport::Kind::cA:
                std::cout << "hypersurface germ " << rep.germ.str({"u1", "u2", "u3", "u4"});
                break;
            case wbl::SingularityReport::Kind::hypersurface_quotient:
                std::cout << "quotient hypersurface germ";
                break;
        }
        std::cout << (rep.verdict == wbl::Verdict::terminal ? "  [terminal]" : "  [not terminal]")
                  << "\n";
    }
    auto bd = wbl::basket_of(WeightVec4(2, 4, 3, 1), 6);
    std::cout << "  basket " << bd.J.str() << ",  a " << bd.a << ",  index " << bd.r << "\n";
    std::cout << "  a*E^3 = " << rat_str(Rat(Int(bd.a)) * an.E3)
              << " = " << rat_str(rr::a_e3(bd.J)) << " (basket route)\n";

    std::cout << "\nthe d = 0 game\n";
    auto res = baskets::enumerate_candidates(0);
    for (const auto& c : res.pre_exclusion)
        std::cout << "  survivor " << c.J.str() << " with a = " << c.a << "\n";
    for (const auto& rec : res.exclusions)
        if (rec.verdict.contradiction)
            std::cout << "  excluded " << rec.J_with_b.str() << ": E.c2 would have to be both "
                      << rat_str(rec.verdict.ec2_i1) << " and " << rat_str(rec.verdict.ec2_i2)
                      << "\n";
    return 0;
}
