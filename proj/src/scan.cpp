#include "gcf/scan.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "gcf/analysis.hpp"
#include "gcf/cf.hpp"
#include "gcf/constants.hpp"
#include "gcf/errors.hpp"
#include "gcf/exact.hpp"

namespace gcf {

namespace {

struct Rule {
    long b0, alpha, beta, gamma, delta;
};

// True when a_n = alpha n + beta vanishes for some integer n in [1, depth].
bool rule_has_zero_numerator(const Rule& r, unsigned depth) {
    if (r.alpha == 0) return r.beta == 0;
    if (r.beta % r.alpha != 0) return false;
    long root = -r.beta / r.alpha;
    return root >= 1 && root <= static_cast<long>(depth);
}

// Convergent ratios of the rule at the requested indices, or nullopt when
// any of them is undefined (q = 0).
std::optional<std::vector<ExactRational>> rule_ratios(const Rule& r,
                                                      const std::vector<unsigned>& depths) {
    unsigned deepest = *std::max_element(depths.begin(), depths.end());
    std::vector<ExactRational> out;
    out.reserve(depths.size());

    ExactInt p_prev2(1), q_prev2(0);
    ExactInt p_prev(r.b0), q_prev(1);
    for (unsigned n = 1; n <= deepest; ++n) {
        ExactInt a(r.alpha * static_cast<long>(n) + r.beta);
        ExactInt b(r.gamma * static_cast<long>(n) + r.delta);
        ExactInt p_cur = b * p_prev;
        p_cur.addmul(a, p_prev2);
        ExactInt q_cur = b * q_prev;
        q_cur.addmul(a, q_prev2);
        p_prev2 = std::move(p_prev);
        q_prev2 = std::move(q_prev);
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        if (std::find(depths.begin(), depths.end(), n) != depths.end()) {
            if (q_prev.is_zero()) return std::nullopt;
            out.emplace_back(p_prev, q_prev);
        }
    }
    return out;
}

}  // namespace

std::vector<ConjectureHit> run_scan(const ScanGrid& grid) {
    const long bound = grid.coefficient_bound;
    if (bound < 0) throw std::invalid_argument("coefficient bound must be >= 0");
    if (grid.depth < 10) throw std::invalid_argument("depth must be >= 10");
    if (grid.match_digits < 10) throw std::invalid_argument("match_digits must be >= 10");
    std::uint64_t side = static_cast<std::uint64_t>(2 * bound + 1);
    std::uint64_t cells = side * side * side * side * side;
    if (cells > 10000000) throw GridTooLarge(cells);

    std::vector<std::pair<std::string, CertifiedRational>> targets;
    for (const auto& [name, fn] : constant_table())
        targets.emplace_back(name, fn(grid.match_digits + 10));
    ExactRational eps(ExactInt(1), ExactInt::pow10(grid.match_digits));

    const unsigned half = grid.depth / 2;
    const unsigned full = grid.depth;
    const unsigned confirm = 2 * grid.depth;

    std::vector<ConjectureHit> hits;
    for (long b0 = -bound; b0 <= bound; ++b0)
        for (long alpha = -bound; alpha <= bound; ++alpha)
            for (long beta = -bound; beta <= bound; ++beta)
                for (long gamma = -bound; gamma <= bound; ++gamma)
                    for (long delta = -bound; delta <= bound; ++delta) {
                        Rule rule{b0, alpha, beta, gamma, delta};
                        if (rule_has_zero_numerator(rule, full)) continue;
                        auto ratios = rule_ratios(rule, {half, full});
                        if (!ratios) continue;
                        const ExactRational& r_half = (*ratios)[0];
                        const ExactRational& r_full = (*ratios)[1];
                        if (abs(r_full - r_half) > eps) continue;  // not Cauchy yet

                        std::optional<std::vector<ExactRational>> deeper;
                        bool deeper_known = false;
                        for (const auto& [name, enclosure] : targets) {
                            ExactRational residual =
                                abs(r_full - enclosure.value) + enclosure.radius;
                            if (residual >= eps) continue;
                            // stability: reconfirm at twice the depth
                            if (!deeper_known) {
                                deeper_known = true;
                                deeper = rule_has_zero_numerator(rule, confirm)
                                             ? std::nullopt
                                             : rule_ratios(rule, {confirm});
                            }
                            if (!deeper) continue;
                            ExactRational recheck =
                                abs((*deeper)[0] - enclosure.value) + enclosure.radius;
                            if (recheck >= eps) continue;
                            hits.push_back({b0, alpha, beta, gamma, delta, name,
                                            log10_abs(residual), true});
                        }
                    }

    std::sort(hits.begin(), hits.end(), [](const ConjectureHit& x, const ConjectureHit& y) {
        return std::tie(x.b0, x.alpha, x.beta, x.gamma, x.delta, x.constant) <
               std::tie(y.b0, y.alpha, y.beta, y.gamma, y.delta, y.constant);
    });
    return hits;
}

bool verify_hit(const ConjectureHit& hit, unsigned digits) {
    CertifiedRational enclosure = constant_enclosure(hit.constant, digits + 10);
    ExactRational eps(ExactInt(1), ExactInt::pow10(digits));
    Rule rule{hit.b0, hit.alpha, hit.beta, hit.gamma, hit.delta};

    double prev_log = 0.0;
    bool have_prev = false;
    bool shrinking = true;
    for (unsigned depth = 200; depth <= 6400; depth *= 2) {
        if (rule_has_zero_numerator(rule, depth)) return false;
        auto ratios = rule_ratios(rule, {depth});
        if (!ratios) return false;
        ExactRational residual = abs((*ratios)[0] - enclosure.value) + enclosure.radius;
        if (residual < eps) return true;
        double cur_log = log10_abs(residual);
        // a residual that stalls is converging to the wrong value; demand at
        // least an order of magnitude per depth doubling
        if (have_prev && cur_log > prev_log - 1.0) shrinking = false;
        prev_log = cur_log;
        have_prev = true;
    }
    return shrinking;
}

void emit_hits_csv(const std::vector<ConjectureHit>& hits, std::ostream& out) {
    out << "b0,alpha,beta,gamma,delta,constant,residual_log10\n";
    for (const auto& h : hits)
        out << h.b0 << ',' << h.alpha << ',' << h.beta << ',' << h.gamma << ',' << h.delta
            << ',' << h.constant << ',' << format_significant9(h.residual_log10) << '\n';
}

}  // namespace gcf
