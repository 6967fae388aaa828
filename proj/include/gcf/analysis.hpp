#ifndef GCF_ANALYSIS_HPP
#define GCF_ANALYSIS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gcf/cf.hpp"
#include "gcf/exact.hpp"

namespace gcf {

// One row of an error table: log10|p/q - target| for a convergent, measured
// against an enclosure whose radius is below 10^-6 of the error itself
// (precision escalates until that holds), so log10_err is good to 1e-6.
struct ErrorRecord {
    std::string family;
    unsigned n;
    ExactInt p;
    ExactInt q;
    double log10_err;
};

struct ErrorTable {
    std::vector<ErrorRecord> records;   // sorted by (family, n), no duplicates
    unsigned digits_used;
    std::vector<std::string> families;
};

// Error series for convergent indices 1..n_max against a named constant.
// Undefined convergents (q = 0) are skipped. The power-ratio family is
// measured on its directly defined convergents p = (n+1)^n, q = n^n rather
// than on the rescaled recurrence outputs. Throws UnknownTarget.
std::vector<ErrorRecord> error_series(const GCFSpec& spec, const std::string& target,
                                      unsigned n_max, unsigned* digits_used = nullptr,
                                      unsigned start_digits = 50);

// Combined table of the three e-expansions (derangement-elegant, euler,
// power-ratio) aligned by convergent index. n_max >= 3.
ErrorTable compare_families(unsigned n_max, unsigned start_digits = 50);

// Certified check that, at every convergent index in lo..hi,
//   err(derangement-elegant) < err(euler) < err(power-ratio),
// decided on exact enclosure endpoints, never float midpoints.
struct OrderingReport {
    bool holds;
    unsigned first_violation;  // meaningful when !holds
};
OrderingReport check_error_ordering(unsigned lo, unsigned hi);

// Exactly nine significant digits, positional notation, round half to even
// on the last digit (the shared numeric convention of every CSV emitted
// here).
std::string format_significant9(double v);

// header family,n,p,q,log10_err; '\n' endings; rows sorted by (family, n).
void emit_csv(const ErrorTable& table, std::ostream& out);

// Inverse of emit_csv (log10_err recovered to its 9 significant digits).
ErrorTable parse_csv(std::istream& in);

// One polyline per family: dashed power-ratio, dotted euler, solid
// otherwise, linear axes n vs log10_err. Throws EmptyTable.
void emit_svg(const ErrorTable& table, std::ostream& out);

}  // namespace gcf

#endif
