// Walks through the Fibonacci square rho = (aba, ab): inverse, reciprocal, dual,
// selfduality, Rauzy windows and the cut-and-project check.

#include <iostream>

#include <sdual/sdual.hpp>

using namespace sdual;

int main() {
    const Substitution rho = parse_substitution("a->aba,b->ab");
    std::cout << "rho            " << rho << '\n'
              << "matrix         " << matrix(rho) << '\n'
              << "decomposition  " << decompose(rho) << '\n'
              << "inverse        " << inverse(rho) << '\n'
              << "reciprocal     " << reciprocal(rho) << '\n'
              << "dual           " << dual_substitution(rho) << '\n';

    const SelfdualClass c = selfdual_class(rho);
    std::cout << "selfdual       " << to_string(c.kind) << ", witness " << *c.witness << '\n';

    const SpectralData sp = spectral(rho);
    std::cout << "alpha          " << sp.alpha << " = " << cf_expand(sp.alpha) << '\n'
              << "dual frequency " << dual_frequency(sp) << '\n';

    const RauzyDecomposition r = rauzy_decomposition(rho);
    std::cout << "R_a            " << to_string(r.Ra) << '\n' << "R_b            " << to_string(r.Rb) << '\n';

    const Interval range{Quad(0), Quad(30)};
    std::cout << "model set on [0,30] matches tiling: " << (cut_project_verify(rho, 1, range) ? "yes" : "no") << '\n';

    StrandSum s = e1_star_apply(rho, StrandSum{{{0, 0}, SegKind::Astar}});
    std::cout << "E1*(rho)(0,a*) " << to_string(s) << " codes " << code_dual_strand(s) << '\n';
}
