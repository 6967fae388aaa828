#include "gcf/invert.hpp"

#include <stdexcept>

#include "gcf/errors.hpp"

namespace gcf {

InversionResult invert(const std::vector<ExactInt>& p, const std::vector<ExactInt>& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("p and q must have equal length");
    if (p.size() < 2)
        throw std::invalid_argument("need at least two convergents to invert");

    InversionResult out;
    out.b0 = p[0];
    out.b1 = q[1];
    out.a1 = p[1] - out.b0 * q[1];

    const std::size_t len = p.size();
    out.tail.reserve(len > 2 ? len - 2 : 0);
    for (std::size_t n = 2; n < len; ++n) {
        ExactInt den = p[n - 1] * q[n - 2] - p[n - 2] * q[n - 1];
        if (den.is_zero()) throw DegenerateAt(n);
        ExactInt num_a = p[n - 1] * q[n] - p[n] * q[n - 1];
        ExactInt num_b = p[n] * q[n - 2] - p[n - 2] * q[n];
        ExactRational a(num_a, den);
        ExactRational b(num_b, den);
        bool integral = a.is_integral() && b.is_integral();
        out.tail.push_back({n, std::move(a), std::move(b), integral});
    }
    return out;
}

InversionResult invert_rationals(const std::vector<ExactRational>& r) {
    std::vector<ExactInt> p, q;
    p.reserve(r.size());
    q.reserve(r.size());
    for (const auto& v : r) {
        p.push_back(v.num());
        q.push_back(v.den());
    }
    return invert(p, q);
}

std::vector<ClearedTerm> clear_denominators(const InversionResult& r) {
    std::vector<ClearedTerm> out;
    out.reserve(r.tail.size());
    // Rescaling level n by c_n maps a_n -> c_{n-1} c_n a_n and b_n -> c_n b_n
    // without changing any convergent ratio. Choosing c_n as the least common
    // denominator of (c_{n-1} a_n, b_n) makes every level integral.
    ExactInt carry(1);  // c_{n-1}
    for (const auto& t : r.tail) {
        ExactRational a_scaled = ExactRational(carry) * t.a;
        ExactInt c = lcm(a_scaled.den(), t.b.den());
        ExactRational a_int = a_scaled * ExactRational(c);
        ExactRational b_int = t.b * ExactRational(c);
        out.push_back({t.n, a_int.num(), b_int.num(), !t.integral});
        carry = std::move(c);
    }
    return out;
}

std::vector<std::pair<ExactRational, ExactRational>> reconstruct(const InversionResult& r,
                                                                 std::size_t n_max) {
    if (n_max > r.tail.size() + 1)
        throw std::invalid_argument("n_max exceeds the inverted range");
    std::vector<std::pair<ExactRational, ExactRational>> out;
    out.reserve(n_max + 1);
    ExactRational p_prev2(1), q_prev2(0);                    // index -1
    ExactRational p_prev(r.b0), q_prev(1);                   // index 0
    out.emplace_back(p_prev, q_prev);
    for (std::size_t n = 1; n <= n_max; ++n) {
        ExactRational a = n == 1 ? ExactRational(r.a1) : r.tail[n - 2].a;
        ExactRational b = n == 1 ? ExactRational(r.b1) : r.tail[n - 2].b;
        ExactRational p_cur = b * p_prev + a * p_prev2;
        ExactRational q_cur = b * q_prev + a * q_prev2;
        out.emplace_back(p_cur, q_cur);
        p_prev2 = std::move(p_prev);
        q_prev2 = std::move(q_prev);
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
    }
    return out;
}

}  // namespace gcf
