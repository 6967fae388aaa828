#ifndef GCF_CF_HPP
#define GCF_CF_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gcf/exact.hpp"

namespace gcf {

// One (a_k, b_k) pair of a generalized continued fraction
//   b0 + a1/(b1 + a2/(b2 + ...)).
// a must be nonzero: a zero partial numerator terminates the fraction, and
// termination is represented by the end of the sequence.
struct GCFTerm {
    ExactInt a;
    ExactInt b;
    std::size_t index;  // >= 1
};

// The named expansions built in:
//   euler                e  = [2; 1,2,1,1,4,1,1,6,...]
//   derangement_raw      e  = 1 + 1/(0+ 1/(1+ 2/(2+ 3/(3+ ...))))
//   derangement_elegant  e  = 2 + 2/(2+ 3/(3+ 4/(4+ ...)))
//   inv_e_minus_1        1/(e-1) = 1/(1+ 2/(2+ 3/(3+ ...)))
//   power_ratio          convergent ratios (n+1)^n / n^n, i.e. (1+1/n)^n
enum class Family { euler, derangement_raw, derangement_elegant, inv_e_minus_1, power_ratio };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// a_n = alpha*n + beta, b_n = gamma*n + delta for n >= 1.
struct AffineRule {
    ExactInt alpha;
    ExactInt beta;
    ExactInt gamma;
    ExactInt delta;
};

// A full expansion description: the leading term b0 plus a term source.
class GCFSpec {
public:
    static GCFSpec family(Family f);
    static GCFSpec affine(ExactInt b0, AffineRule rule);
    // Validates a != 0 for every pair; throws ZeroPartialNumerator.
    static GCFSpec explicit_terms(ExactInt b0,
                                  std::vector<std::pair<ExactInt, ExactInt>> ab_pairs);

    const ExactInt& b0() const { return b0_; }
    std::optional<Family> family_kind() const;

private:
    GCFSpec(ExactInt b0, std::variant<std::vector<GCFTerm>, Family, AffineRule> src)
        : b0_(std::move(b0)), source_(std::move(src)) {}

    ExactInt b0_;
    std::variant<std::vector<GCFTerm>, Family, AffineRule> source_;

    friend std::vector<GCFTerm> terms(const GCFSpec&, std::size_t);
};

// An index n >= -1 with the integer pair (p_n, q_n) of the forward
// recurrences p_k = b_k p_{k-1} + a_k p_{k-2}, q_k likewise, from the
// starting values p_{-1} = 1, q_{-1} = 0, p_0 = b0, q_0 = 1.
struct Convergent {
    std::int64_t index;
    ExactInt p;
    ExactInt q;
};

// First n_terms terms, indices 1..n_terms. Deterministic for a given spec.
// Throws ZeroPartialNumerator / InsufficientTerms.
std::vector<GCFTerm> terms(const GCFSpec& spec, std::size_t n_terms);

// Convergents with indices 0..n_max by the exact forward recurrences.
// (p, q) are the raw recurrence outputs, never reduced to lowest terms.
std::vector<Convergent> convergents(const GCFSpec& spec, std::size_t n_max);

// Reduced fraction p/q. Throws UndefinedConvergent when q = 0.
ExactRational evaluate(const Convergent& c);

// [a0; a1, a2, ...] with all partial numerators 1. Coefficients after the
// first must be >= 1; throws NotSimple otherwise.
GCFSpec simple_to_gcf(const std::vector<ExactInt>& coeffs);

GCFSpec euler_cf();
GCFSpec derangement_raw_cf();
GCFSpec derangement_elegant_cf();
GCFSpec inv_e_minus_1_cf();
GCFSpec power_ratio_cf();

// The directly defined convergent of the (1+1/n)^n sequence:
// p = (n+1)^n, q = n^n. (The power_ratio term source reproduces these
// ratios, but with both members rescaled by the denominator-clearing
// equivalence transformation.)
Convergent power_ratio_convergent(std::size_t n);

}  // namespace gcf

#endif
