// The smallest co-spectral pair: C4 + K1 and the star K_{1,4} share the
// characteristic polynomial x^5 - 4x^3 yet are trivially non-isomorphic.
// Color refinement and a two-variable first-order sentence both tell them
// apart, so co-spectrality and logical indistinguishability pull in different
// directions already at five vertices.

#include <iostream>

#include "specwl/census.hpp"
#include "specwl/formula.hpp"
#include "specwl/generators.hpp"
#include "specwl/spectral.hpp"
#include "specwl/wl.hpp"

int main() {
    using namespace specwl;
    Graph g = disjoint_union(cycle(4), complete(1));
    Graph h = complete_bipartite(1, 4);

    std::cout << "charpoly(C4+K1) = " << to_string(charpoly_direct(g)) << "\n";
    std::cout << "charpoly(K_1,4) = " << to_string(charpoly_direct(h)) << "\n";
    std::cout << "co-spectral:      " << (cospectral(g, h) ? "yes" : "no") << "\n";
    std::cout << "isomorphic:       " << (isomorphic(g, h) ? "yes" : "no") << "\n";
    std::cout << "1-WL equivalent:  " << (wl_equivalent(g, h, 1) ? "yes" : "no") << "\n";

    Formula isolated = parse_formula("Ex x All y ~E(x,y)");
    std::cout << "\"some vertex is isolated\" holds on C4+K1: " << eval(g, isolated)
              << ", on K_1,4: " << eval(h, isolated) << "\n";
    return 0;
}
