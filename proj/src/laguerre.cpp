#include "gcf/laguerre.hpp"

#include <cmath>
#include <stdexcept>

namespace gcf {

namespace {

// L_m(x) and L_{m-1}(x) by the three-term recurrence
//   j L_j = (2j - 1 - x) L_{j-1} - (j - 1) L_{j-2}.
struct LaguerrePair {
    double current;
    double previous;
};

LaguerrePair laguerre_eval(unsigned m, double x) {
    double prev = 0.0;
    double cur = 1.0;
    for (unsigned j = 1; j <= m; ++j) {
        double next = ((2.0 * j - 1.0 - x) * cur - (j - 1.0) * prev) / j;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

}  // namespace

QuadratureRule gauss_laguerre(unsigned m) {
    if (m == 0) throw std::invalid_argument("need at least one quadrature node");
    constexpr double tol = 1e-14;
    constexpr int max_iter = 100;

    QuadratureRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);

    double z = 0.0;
    for (unsigned i = 0; i < m; ++i) {
        // Stroud-Secrest style initial guesses, refined by Newton.
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * m);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * m);
        } else {
            double step = i - 1.0;
            z += ((1.0 + 2.55 * step) / (1.9 * step)) * (z - rule.nodes[i - 2]);
        }

        int iter = 0;
        while (true) {
            LaguerrePair lp = laguerre_eval(m, z);
            double deriv = static_cast<double>(m) * (lp.current - lp.previous) / z;
            double dz = lp.current / deriv;
            z -= dz;
            if (std::fabs(dz) <= tol * std::fmax(1.0, std::fabs(z))) break;
            if (++iter >= max_iter)
                throw std::runtime_error("Laguerre root iteration failed to converge");
        }
        LaguerrePair lp = laguerre_eval(m, z);
        double deriv = static_cast<double>(m) * (lp.current - lp.previous) / z;
        rule.nodes[i] = z;
        rule.weights[i] = -1.0 / (deriv * m * lp.previous);
    }
    return rule;
}

}  // namespace gcf
