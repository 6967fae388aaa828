#ifndef GCF_SCAN_HPP
#define GCF_SCAN_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gcf {

// Search space: b0, alpha, beta, gamma, delta each range over
// -coefficient_bound..coefficient_bound, with a_n = alpha n + beta and
// b_n = gamma n + delta for n >= 1. depth is the convergent index used as
// the limit estimate; a candidate must agree with a constant to
// match_digits decimal digits, certified on enclosure endpoints.
struct ScanGrid {
    long coefficient_bound = 2;
    unsigned depth = 200;
    unsigned match_digits = 20;
};

struct ConjectureHit {
    long b0, alpha, beta, gamma, delta;
    std::string constant;
    double residual_log10;  // certified upper bound, always <= -match_digits
    bool stable;            // reconfirmed at twice the depth (always true in results)
};

// Enumerate the grid in lexicographic rule order. A rule is skipped when
// some a_n vanishes in range, a convergent used for evaluation has q = 0,
// or the sequence shows no Cauchy behavior at the scan tolerance. Matches
// are reconfirmed at 2x depth before being emitted; output is sorted by
// (rule, constant) and deterministic. Throws GridTooLarge past 10^7 cells.
std::vector<ConjectureHit> run_scan(const ScanGrid& grid);

// Recheck a hit at higher precision: true when the residual drops below
// 10^-digits at some doubled depth, or keeps shrinking monotonically at
// the deepest points tried.
bool verify_hit(const ConjectureHit& hit, unsigned digits);

// header b0,alpha,beta,gamma,delta,constant,residual_log10; same numeric
// conventions as the error-table CSV.
void emit_hits_csv(const std::vector<ConjectureHit>& hits, std::ostream& out);

}  // namespace gcf

#endif
