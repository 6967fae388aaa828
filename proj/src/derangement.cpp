#include "gcf/derangement.hpp"

#include <stdexcept>

#include "gcf/errors.hpp"
#include "gcf/laguerre.hpp"

namespace gcf {

ExactInt factorial(unsigned n) { return ExactInt::factorial(n); }

ExactInt subfactorial_rec1(unsigned n) {
    ExactInt d(1);
    for (unsigned k = 1; k <= n; ++k) {
        d *= ExactInt(static_cast<long>(k));
        d += ExactInt(k % 2 == 0 ? 1 : -1);
    }
    return d;
}

ExactInt subfactorial_rec2(unsigned n) {
    if (n == 0) return 1;
    ExactInt prev2(1), prev(0);  // !0, !1
    for (unsigned k = 2; k <= n; ++k) {
        ExactInt cur = ExactInt(static_cast<long>(k - 1)) * (prev + prev2);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

ExactInt subfactorial_sum(unsigned n) {
    ExactRational sum(0);
    ExactInt k_fact(1);
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) k_fact *= ExactInt(static_cast<long>(k));
        ExactRational term(ExactInt(k % 2 == 0 ? 1 : -1), k_fact);
        sum += term;
    }
    ExactRational result = ExactRational(factorial(n)) * sum;
    if (!result.is_integral()) throw NonIntegralResult();
    return result.num();
}

ExactInt subfactorial_nearest(unsigned n, const CertifiedRational& e_ref) {
    if (n == 0) return 1;
    ExactRational lo_e = e_ref.lo();
    if (lo_e.sign() <= 0) throw InsufficientPrecision();
    ExactRational n_fact(factorial(n));
    // n!/e lies in [n!/hi, n!/lo]; accept only if both ends round alike.
    ExactInt lo_round = (n_fact / e_ref.hi()).round_nearest();
    ExactInt hi_round = (n_fact / lo_e).round_nearest();
    if (lo_round != hi_round) throw InsufficientPrecision();
    return lo_round;
}

ExactInt subfactorial_nearest(unsigned n) {
    unsigned digits = static_cast<unsigned>(factorial(n).digit_count()) + 10;
    return subfactorial_nearest(n, e_enclosure(digits));
}

double subfactorial_integral(unsigned n, unsigned nodes) {
    if (n > 20) throw UnsupportedDegree(n);
    unsigned required = (n + 2) / 2;  // ceil((n+1)/2)
    if (nodes < required) throw TooFewNodes(nodes, required);
    QuadratureRule rule = gauss_laguerre(nodes);
    double sum = 0.0;
    for (unsigned i = 0; i < nodes; ++i) {
        double base = rule.nodes[i] - 1.0;
        double power = 1.0;
        for (unsigned k = 0; k < n; ++k) power *= base;
        sum += rule.weights[i] * power;
    }
    return sum;
}

ExactRational derangement_probability(unsigned n) {
    return {subfactorial_rec1(n), factorial(n)};
}

std::string_view method_name(SubfactorialMethod m) {
    switch (m) {
        case SubfactorialMethod::rec1: return "rec1";
        case SubfactorialMethod::rec2: return "rec2";
        case SubfactorialMethod::sum: return "sum";
        case SubfactorialMethod::nearest: return "nearest";
    }
    throw std::logic_error("unreachable");
}

std::optional<SubfactorialMethod> method_from_name(std::string_view name) {
    for (SubfactorialMethod m : {SubfactorialMethod::rec1, SubfactorialMethod::rec2,
                                 SubfactorialMethod::sum, SubfactorialMethod::nearest})
        if (method_name(m) == name) return m;
    return std::nullopt;
}

SubfactorialTable subfactorial_table(unsigned n_max, SubfactorialMethod method) {
    SubfactorialTable table;
    table.method = method;
    table.values.reserve(n_max + 1);
    switch (method) {
        case SubfactorialMethod::rec1: {
            ExactInt d(1);
            table.values.push_back(d);
            for (unsigned k = 1; k <= n_max; ++k) {
                d *= ExactInt(static_cast<long>(k));
                d += ExactInt(k % 2 == 0 ? 1 : -1);
                table.values.push_back(d);
            }
            break;
        }
        case SubfactorialMethod::rec2: {
            ExactInt prev2(1), prev(0);
            table.values.push_back(prev2);
            if (n_max >= 1) table.values.push_back(prev);
            for (unsigned k = 2; k <= n_max; ++k) {
                ExactInt cur = ExactInt(static_cast<long>(k - 1)) * (prev + prev2);
                table.values.push_back(cur);
                prev2 = std::move(prev);
                prev = std::move(cur);
            }
            break;
        }
        case SubfactorialMethod::sum: {
            ExactRational sum(0);
            ExactInt k_fact(1);
            for (unsigned k = 0; k <= n_max; ++k) {
                if (k > 0) k_fact *= ExactInt(static_cast<long>(k));
                sum += ExactRational(ExactInt(k % 2 == 0 ? 1 : -1), k_fact);
                ExactRational value = ExactRational(k_fact) * sum;
                if (!value.is_integral()) throw NonIntegralResult();
                table.values.push_back(value.num());
            }
            break;
        }
        case SubfactorialMethod::nearest: {
            for (unsigned k = 0; k <= n_max; ++k) table.values.push_back(subfactorial_nearest(k));
            break;
        }
    }
    return table;
}

}  // namespace gcf
