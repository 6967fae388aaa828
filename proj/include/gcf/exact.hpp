#ifndef GCF_EXACT_HPP
#define GCF_EXACT_HPP

#include <gmp.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

namespace gcf {

// Arbitrary-precision signed integer: a thin RAII wrapper over GMP's mpz_t.
// Zero is canonical (sign 0, no limbs) and all arithmetic is exact.
class ExactInt {
public:
    ExactInt() { mpz_init(z_); }
    ExactInt(long v) { mpz_init_set_si(z_, v); }
    // Strict decimal parse: optional leading '-', then digits. Throws
    // std::invalid_argument on anything else.
    explicit ExactInt(const std::string& decimal);

    ExactInt(const ExactInt& o) { mpz_init_set(z_, o.z_); }
    ExactInt(ExactInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    ExactInt& operator=(const ExactInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    ExactInt& operator=(ExactInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~ExactInt() { mpz_clear(z_); }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const;  // throws std::overflow_error when out of range
    double to_double() const { return mpz_get_d(z_); }

    // |x| = mantissa * 2^exp with mantissa in [0.5, 1); x must be nonzero.
    std::pair<double, long> frexp2() const {
        long e = 0;
        double m = mpz_get_d_2exp(&e, z_);
        return {m, e};
    }

    // Exact number of decimal digits of |x| (1 for zero).
    std::size_t digit_count() const;

    std::string str() const;

    ExactInt& operator+=(const ExactInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    ExactInt& operator-=(const ExactInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    ExactInt& operator*=(const ExactInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    // this += x * y, without a temporary
    ExactInt& addmul(const ExactInt& x, const ExactInt& y) {
        mpz_addmul(z_, x.z_, y.z_);
        return *this;
    }

    friend ExactInt operator+(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend ExactInt operator-(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend ExactInt operator*(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    friend ExactInt operator-(const ExactInt& a) {
        ExactInt r;
        mpz_neg(r.z_, a.z_);
        return r;
    }

    friend bool operator==(const ExactInt& a, const ExactInt& b) {
        return mpz_cmp(a.z_, b.z_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend ExactInt abs(const ExactInt& a) {
        ExactInt r;
        mpz_abs(r.z_, a.z_);
        return r;
    }
    friend ExactInt gcd(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend ExactInt lcm(const ExactInt& a, const ExactInt& b) {
        ExactInt r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    friend ExactInt pow(const ExactInt& base, unsigned long exp) {
        ExactInt r;
        mpz_pow_ui(r.z_, base.z_, exp);
        return r;
    }
    static ExactInt pow10(unsigned long exp) {
        ExactInt r;
        mpz_ui_pow_ui(r.z_, 10, exp);
        return r;
    }
    static ExactInt factorial(unsigned long n) {
        ExactInt r;
        mpz_fac_ui(r.z_, n);
        return r;
    }

    // Truncated division (quotient toward zero); b must be nonzero.
    static std::pair<ExactInt, ExactInt> divmod(const ExactInt& a, const ExactInt& b);
    // Floor division; b must be nonzero.
    static ExactInt floor_div(const ExactInt& a, const ExactInt& b);

    friend std::ostream& operator<<(std::ostream& os, const ExactInt& v) {
        return os << v.str();
    }

    friend class ExactRational;

private:
    mpz_t z_;
};

// Reduced fraction of ExactInts: den > 0 and gcd(|num|, den) = 1 always.
// Wraps GMP's mpq_t, whose arithmetic maintains exactly that canonical form.
class ExactRational {
public:
    ExactRational() { mpq_init(q_); }
    ExactRational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    ExactRational(const ExactInt& n) {
        mpq_init(q_);
        mpq_set_z(q_, n.z_);
    }
    // Throws std::domain_error when den = 0.
    ExactRational(const ExactInt& num, const ExactInt& den);

    ExactRational(const ExactRational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    ExactRational(ExactRational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    ExactRational& operator=(const ExactRational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    ExactRational& operator=(ExactRational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~ExactRational() { mpq_clear(q_); }

    ExactInt num() const {
        ExactInt r;
        mpz_set(r.z_, mpq_numref(q_));
        return r;
    }
    ExactInt den() const {
        ExactInt r;
        mpz_set(r.z_, mpq_denref(q_));
        return r;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integral() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    double to_double() const { return mpq_get_d(q_); }
    ExactInt floor() const {
        ExactInt r;
        mpz_fdiv_q(r.z_, mpq_numref(q_), mpq_denref(q_));
        return r;
    }
    // Nearest integer as floor(x + 1/2); ties round up.
    ExactInt round_nearest() const;

    // Throws std::domain_error on zero.
    ExactRational reciprocal() const;

    // "num/den", or just "num" when den = 1.
    std::string str() const;

    ExactRational& operator+=(const ExactRational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    ExactRational& operator-=(const ExactRational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    ExactRational& operator*=(const ExactRational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
        ExactRational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);
    friend ExactRational operator-(const ExactRational& a) {
        ExactRational r;
        mpq_neg(r.q_, a.q_);
        return r;
    }
    friend ExactRational abs(const ExactRational& a) {
        ExactRational r;
        mpq_abs(r.q_, a.q_);
        return r;
    }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = mpq_cmp(a.q_, b.q_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& v) {
        return os << v.str();
    }

private:
    mpq_t q_;
};

enum class DecimalRounding { nearest_even, truncate };

// Fixed-point decimal rendering with `places` digits after the point
// (none and no point when places = 0). Truncation is toward zero.
std::string to_decimal(const ExactRational& r, std::size_t places,
                       DecimalRounding rounding = DecimalRounding::nearest_even);

}  // namespace gcf

#endif
