// Computes the zero locus of the section x of the ideal sheaf (x, y) on the
// affine plane, then prints the cells and probes a few points.

#include <iostream>
#include <vector>

#include "zlocus/zlocus.hpp"

int main() {
    using namespace zlocus;
    RingPtr R = PolyRing::make({"x", "y"});

    // (x, y) is presented by R --(-y, x)^T--> R^2; the section x lifts to (1, 0).
    PolyMatrix A(R, 2, 1, {parse_poly("-y", R), parse_poly("x", R)});
    ModulePresentation pres(A, {Poly::one(R), Poly(R)});

    ConstructibleSet locus = zero_locus(pres);
    std::cout << to_json(locus).dump(2) << "\n";

    for (auto [x, y] : std::vector<std::pair<long, long>>{{0, 1}, {0, 0}, {1, 1}, {0, -3}}) {
        std::vector<GaussianRational> p{GaussianRational(x), GaussianRational(y)};
        std::cout << "(" << x << ", " << y << "): " << (contains_point(locus, p) ? "in" : "out") << "\n";
    }
}
