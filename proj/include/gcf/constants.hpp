#ifndef GCF_CONSTANTS_HPP
#define GCF_CONSTANTS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gcf/exact.hpp"

namespace gcf {

// An exact rational midpoint plus a proven radius: the represented real lies
// in [value - radius, value + radius].
struct CertifiedRational {
    ExactRational value;
    ExactRational radius;

    ExactRational lo() const { return value - radius; }
    ExactRational hi() const { return value + radius; }
    bool contains(const ExactRational& x) const { return lo() <= x && x <= hi(); }
};

// Enclosure of e from the factorial series sum_{k<=K} 1/k!, with K chosen so
// the proven tail bound 1/(K! K) is at most 10^-digits; that bound is the
// radius. digits must be in 1..100000.
CertifiedRational e_enclosure(unsigned digits);

using ConstantFn = std::function<CertifiedRational(unsigned digits)>;

// The constants matched against: e, e-1, 1/(e-1), 1/e, e/(e-1), each derived
// from e_enclosure by exact interval arithmetic with radius <= 10^-digits.
const std::vector<std::pair<std::string, ConstantFn>>& constant_table();

// Enclosure for one named table entry; throws UnknownTarget.
CertifiedRational constant_enclosure(const std::string& name, unsigned digits);

// log10|r| to within 1e-9 absolute, from the binary exponents of num/den
// plus a float correction on the leading limbs. Throws ZeroArgument.
double log10_abs(const ExactRational& r);

}  // namespace gcf

#endif
