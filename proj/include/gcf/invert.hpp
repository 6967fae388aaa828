#ifndef GCF_INVERT_HPP
#define GCF_INVERT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "gcf/exact.hpp"

namespace gcf {

// One recovered coefficient pair. The pair is the exact solution of the
// forward recurrences at index n, as a ratio of integer determinants:
//   a_n = (p_{n-1} q_n - p_n q_{n-1}) / (p_{n-1} q_{n-2} - p_{n-2} q_{n-1})
//   b_n = (p_n q_{n-2} - p_{n-2} q_n) / (p_{n-1} q_{n-2} - p_{n-2} q_{n-1})
// which need not be integral for arbitrary input sequences.
struct InversionTerm {
    std::size_t n;     // >= 2
    ExactRational a;
    ExactRational b;
    bool integral;     // both members are integers
};

// Recovered starting values plus the tail pairs. Feeding the result back
// through the forward recurrences reproduces the input (p_n, q_n) exactly.
struct InversionResult {
    ExactInt b0;   // = p_0
    ExactInt a1;   // = p_1 - b0 q_1
    ExactInt b1;   // = q_1
    std::vector<InversionTerm> tail;  // n = 2 .. L-1
};

// Solve the inverse problem: recover (a_n, b_n) from numerator/denominator
// sequences of equal length L >= 2, indexed 0..L-1.
// Throws DegenerateAt(n) when the denominator determinant vanishes.
InversionResult invert(const std::vector<ExactInt>& p, const std::vector<ExactInt>& q);

// Use num/den of each reduced rational as (p_n, q_n) and delegate to invert.
// Reduction can change the recovered coefficients relative to the unreduced
// sequences: common factors enter the determinants.
InversionResult invert_rationals(const std::vector<ExactRational>& r);

// Integer view of a result after the denominator-clearing equivalence
// transformation: each level is rescaled by the least multiplier making it
// integral, which rescales (p_n, q_n) but preserves every convergent ratio.
// `rescaled` marks levels whose raw pair was not already integral.
struct ClearedTerm {
    std::size_t n;
    ExactInt a;
    ExactInt b;
    bool rescaled;
};

std::vector<ClearedTerm> clear_denominators(const InversionResult& r);

// Feed a result back through the forward recurrences in exact rational
// arithmetic; returns (p_n, q_n) for n = 0..n_max, n_max <= 1 + tail length.
std::vector<std::pair<ExactRational, ExactRational>> reconstruct(const InversionResult& r,
                                                                 std::size_t n_max);

}  // namespace gcf

#endif
