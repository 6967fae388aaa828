#include "gcf/exact.hpp"

#include <cstdlib>
#include <memory>
#include <stdexcept>

namespace gcf {

namespace {

bool valid_decimal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

std::string mpz_str(const mpz_t z) {
    // +2: sign and terminator
    std::size_t need = mpz_sizeinbase(z, 10) + 2;
    std::string buf(need, '\0');
    mpz_get_str(buf.data(), 10, z);
    buf.resize(buf.find('\0'));
    return buf;
}

}  // namespace

ExactInt::ExactInt(const std::string& decimal) {
    if (!valid_decimal(decimal))
        throw std::invalid_argument("not a decimal integer: \"" + decimal + "\"");
    mpz_init_set_str(z_, decimal.c_str(), 10);
}

long ExactInt::to_long() const {
    if (!fits_long()) throw std::overflow_error("value does not fit in long: " + str());
    return mpz_get_si(z_);
}

std::size_t ExactInt::digit_count() const {
    if (is_zero()) return 1;
    std::size_t d = mpz_sizeinbase(z_, 10);  // exact or one too large
    if (d > 1) {
        mpz_t t;
        mpz_init(t);
        mpz_ui_pow_ui(t, 10, d - 1);
        if (mpz_cmpabs(z_, t) < 0) --d;
        mpz_clear(t);
    }
    return d;
}

std::string ExactInt::str() const { return mpz_str(z_); }

std::pair<ExactInt, ExactInt> ExactInt::divmod(const ExactInt& a, const ExactInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    ExactInt q, r;
    mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
    return {std::move(q), std::move(r)};
}

ExactInt ExactInt::floor_div(const ExactInt& a, const ExactInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    ExactInt q;
    mpz_fdiv_q(q.z_, a.z_, b.z_);
    return q;
}

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.z_);
    mpz_set(mpq_denref(q_), den.z_);
    mpq_canonicalize(q_);
}

ExactInt ExactRational::round_nearest() const {
    // floor(x + 1/2) = floor((2 num + den) / (2 den))
    ExactInt n2 = num() + num() + den();
    ExactInt d2 = den() + den();
    return ExactInt::floor_div(n2, d2);
}

ExactRational ExactRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    ExactRational r;
    mpq_inv(r.q_, q_);
    return r;
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    ExactRational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

std::string ExactRational::str() const {
    if (is_integral()) return num().str();
    return num().str() + "/" + den().str();
}

std::string to_decimal(const ExactRational& r, std::size_t places, DecimalRounding rounding) {
    ExactInt n = abs(r.num());
    ExactInt d = r.den();
    ExactInt scale = ExactInt::pow10(places);
    auto [q, rem] = ExactInt::divmod(n * scale, d);
    if (rounding == DecimalRounding::nearest_even && !rem.is_zero()) {
        ExactInt twice = rem + rem;
        if (twice > d || (twice == d && q.odd())) q += 1;
    }
    std::string digits = q.str();
    if (digits.size() < places + 1)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (r.sign() < 0) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

}  // namespace gcf
