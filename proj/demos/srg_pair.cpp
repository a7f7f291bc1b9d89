// Shrikhande graph vs the 4x4 rook's graph: the classic pair of
// non-isomorphic strongly regular graphs with parameters (16,6,2,2). They are
// co-spectral, 2-WL equivalent, and their cellular algebras are isomorphic;
// within strongly regular graphs those three notions coincide.

#include <iostream>

#include "specwl/cellular.hpp"
#include "specwl/census.hpp"
#include "specwl/generators.hpp"
#include "specwl/spectral.hpp"
#include "specwl/wl.hpp"

int main() {
    using namespace specwl;
    Graph s = shrikhande();
    Graph r = rook_4x4();

    auto ps = srg_params(s), pr = srg_params(r);
    std::cout << "shrikhande: srg(" << ps->n << "," << ps->r << "," << ps->lambda << "," << ps->mu
              << ")\n";
    std::cout << "rook 4x4:   srg(" << pr->n << "," << pr->r << "," << pr->lambda << "," << pr->mu
              << ")\n";
    std::cout << "co-spectral:        " << cospectral(s, r) << "\n";
    std::cout << "2-WL equivalent:    " << wl_equivalent(s, r, 2) << "\n";
    std::cout << "algebra isomorphic: " << algebra_isomorphic(s, r) << "\n";
    std::cout << "isomorphic:         " << isomorphic(s, r) << "\n";

    CoherentConfig cfg = coherent_config(s);
    std::cout << "cellular algebra basis classes: " << cfg.num_classes << " (I, A, J-I-A)\n";
    return 0;
}
