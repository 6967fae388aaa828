#ifndef GCF_DERANGEMENT_HPP
#define GCF_DERANGEMENT_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "gcf/constants.hpp"
#include "gcf/exact.hpp"

namespace gcf {

ExactInt factorial(unsigned n);

// !n by the first-order recurrence !n = n !(n-1) + (-1)^n, !0 = 1.
ExactInt subfactorial_rec1(unsigned n);

// !n by the second-order recurrence !n = (n-1)(!(n-1) + !(n-2)),
// !0 = 1, !1 = 0.
ExactInt subfactorial_rec2(unsigned n);

// !n by inclusion-exclusion: n! sum_{k=0}^{n} (-1)^k / k!, accumulated in
// exact rationals. The sum must reduce to an integer; a NonIntegralResult
// here means a bug, not a bad input.
ExactInt subfactorial_sum(unsigned n);

// !n as the nearest whole number to n!/e, certified against the enclosure:
// the result is accepted only when both enclosure endpoints round to the
// same integer (else InsufficientPrecision). The floor form
// !n = floor((n! + 1/2)/e) fails at n = 0, where it gives 0 instead of
// !0 = 1; n = 0 is answered directly.
ExactInt subfactorial_nearest(unsigned n, const CertifiedRational& e_ref);

// Convenience: enclosure of e at digit-length(n!) + 10 digits.
ExactInt subfactorial_nearest(unsigned n);

// Gauss-Laguerre estimate of the integral form of !n,
//   integral_0^inf (x-1)^n e^-x dx,
// exact through degree 2*nodes - 1 up to float rounding. n <= 20;
// nodes >= ceil((n+1)/2). Throws TooFewNodes / UnsupportedDegree.
double subfactorial_integral(unsigned n, unsigned nodes);

// Exact probability !n / n! that a random permutation has no fixed point.
ExactRational derangement_probability(unsigned n);

enum class SubfactorialMethod { rec1, rec2, sum, nearest };

std::string_view method_name(SubfactorialMethod m);
std::optional<SubfactorialMethod> method_from_name(std::string_view name);

// Values of !0 .. !n_max computed with one method. All methods produce
// identical tables.
struct SubfactorialTable {
    std::vector<ExactInt> values;
    SubfactorialMethod method;
};

SubfactorialTable subfactorial_table(unsigned n_max, SubfactorialMethod method);

}  // namespace gcf

#endif
