#include "gcf/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "gcf/errors.hpp"

namespace gcf {

namespace {

// Positive-tail bound: sum_{k>K} 1/k! < 1/(K! K).
unsigned pick_series_length(unsigned digits) {
    ExactInt target = ExactInt::pow10(digits);
    ExactInt fact(1);
    unsigned k = 1;
    while (true) {
        fact *= ExactInt(static_cast<long>(k));
        if (fact * ExactInt(static_cast<long>(k)) >= target) return k;
        ++k;
    }
}

CertifiedRational interval_from_endpoints(const ExactRational& lo, const ExactRational& hi) {
    ExactRational half(ExactInt(1), ExactInt(2));
    return {(lo + hi) * half, (hi - lo) * half};
}

// Reciprocal of an enclosure known to exclude zero.
CertifiedRational interval_reciprocal(const CertifiedRational& c) {
    ExactRational lo = c.lo(), hi = c.hi();
    if (lo.sign() <= 0 && hi.sign() >= 0)
        throw std::domain_error("reciprocal of an interval containing zero");
    return interval_from_endpoints(hi.reciprocal(), lo.reciprocal());
}

CertifiedRational shift(const CertifiedRational& c, long offset) {
    return {c.value + ExactRational(offset), c.radius};
}

// Derive an enclosure from e_enclosure via `f`, escalating the source
// precision until the derived radius meets 10^-digits.
CertifiedRational derive(unsigned digits, CertifiedRational (*f)(const CertifiedRational&)) {
    ExactRational bound(ExactInt(1), ExactInt::pow10(digits));
    for (unsigned src = digits + 1;; src *= 2) {
        CertifiedRational d = f(e_enclosure(src));
        if (d.radius <= bound) return d;
    }
}

}  // namespace

CertifiedRational e_enclosure(unsigned digits) {
    if (digits < 1 || digits > 100000)
        throw std::invalid_argument("digits must be in 1..100000");
    unsigned k_max = pick_series_length(digits);

    // sum_{k=0}^{K} 1/k! = N / K! with N = sum_{k=0}^{K} K!/k!, accumulated
    // from the k = K term downward so every step is an integer multiply-add.
    ExactInt numer(0), partial(1), k_fact(1);
    for (unsigned k = k_max; k > 0; --k) {
        numer += partial;
        partial *= ExactInt(static_cast<long>(k));
        k_fact *= ExactInt(static_cast<long>(k));
    }
    numer += partial;  // k = 0 term, K!/0! = K!

    ExactRational value(numer, k_fact);
    ExactRational radius(ExactInt(1), k_fact * ExactInt(static_cast<long>(k_max)));
    return {value, radius};
}

const std::vector<std::pair<std::string, ConstantFn>>& constant_table() {
    static const std::vector<std::pair<std::string, ConstantFn>> table = {
        {"e", [](unsigned d) { return e_enclosure(d); }},
        {"e-1",
         [](unsigned d) {
             return derive(d, +[](const CertifiedRational& e) { return shift(e, -1); });
         }},
        {"1/(e-1)",
         [](unsigned d) {
             return derive(d, +[](const CertifiedRational& e) {
                 return interval_reciprocal(shift(e, -1));
             });
         }},
        {"1/e",
         [](unsigned d) {
             return derive(d, +[](const CertifiedRational& e) {
                 return interval_reciprocal(e);
             });
         }},
        {"e/(e-1)",
         [](unsigned d) {
             // e/(e-1) = 1 + 1/(e-1)
             return derive(d, +[](const CertifiedRational& e) {
                 return shift(interval_reciprocal(shift(e, -1)), 1);
             });
         }},
    };
    return table;
}

CertifiedRational constant_enclosure(const std::string& name, unsigned digits) {
    for (const auto& [n, fn] : constant_table())
        if (n == name) return fn(digits);
    throw UnknownTarget(name);
}

double log10_abs(const ExactRational& r) {
    if (r.is_zero()) throw ZeroArgument();
    static const double log10_2 = std::log10(2.0);
    auto [mn, en] = r.num().frexp2();
    auto [md, ed] = r.den().frexp2();
    return std::log10(std::fabs(mn)) - std::log10(md) +
           static_cast<double>(en - ed) * log10_2;
}

}  // namespace gcf
