#ifndef GCF_LAGUERRE_HPP
#define GCF_LAGUERRE_HPP

#include <vector>

namespace gcf {

// Nodes and weights for m-point Gauss-Laguerre quadrature on [0, inf) with
// weight e^-x: integral e^-x f(x) dx ~ sum w_i f(x_i), exact for polynomial
// f of degree <= 2m-1.
struct QuadratureRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;
};

// Roots of the m-th Laguerre polynomial by Newton iteration (tolerance
// 1e-14, at most 100 iterations per root); no stored tables.
QuadratureRule gauss_laguerre(unsigned m);

}  // namespace gcf

#endif
