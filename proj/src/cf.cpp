#include "gcf/cf.hpp"

#include <stdexcept>
#include <utility>

#include "gcf/errors.hpp"
#include "gcf/invert.hpp"

namespace gcf {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::euler: return "euler";
        case Family::derangement_raw: return "derangement-raw";
        case Family::derangement_elegant: return "derangement-elegant";
        case Family::inv_e_minus_1: return "inv-e-minus-1";
        case Family::power_ratio: return "power-ratio";
    }
    throw std::logic_error("unreachable");
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::euler, Family::derangement_raw, Family::derangement_elegant,
                     Family::inv_e_minus_1, Family::power_ratio})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

namespace {

ExactInt family_b0(Family f) {
    switch (f) {
        case Family::euler: return 2;
        case Family::derangement_raw: return 1;
        case Family::derangement_elegant: return 2;
        case Family::inv_e_minus_1: return 0;
        case Family::power_ratio: return 1;
    }
    throw std::logic_error("unreachable");
}

// Coefficients of e = [2; 1,2,1,1,4,1,1,6,...]: b_k = 2(k+1)/3 when
// k = 2 (mod 3), otherwise 1.
GCFTerm euler_term(std::size_t k) {
    if (k % 3 == 2) return {1, ExactInt(static_cast<long>(2 * (k + 1) / 3)), k};
    return {1, 1, k};
}

std::vector<GCFTerm> family_terms(Family f, std::size_t n_terms) {
    std::vector<GCFTerm> out;
    out.reserve(n_terms);
    switch (f) {
        case Family::euler:
            for (std::size_t k = 1; k <= n_terms; ++k) out.push_back(euler_term(k));
            break;
        case Family::derangement_raw:
            // a_1 = 1, b_1 = 0, then a_k = b_k = k - 1. (The construction's
            // a_0 = 0 is never consumed by the forward recurrences.)
            for (std::size_t k = 1; k <= n_terms; ++k) {
                ExactInt v(k == 1 ? 1 : static_cast<long>(k - 1));
                out.push_back({k == 1 ? ExactInt(1) : v, k == 1 ? ExactInt(0) : v, k});
            }
            break;
        case Family::derangement_elegant:
            for (std::size_t k = 1; k <= n_terms; ++k) {
                ExactInt v(static_cast<long>(k + 1));
                out.push_back({v, v, k});
            }
            break;
        case Family::inv_e_minus_1:
            for (std::size_t k = 1; k <= n_terms; ++k) {
                ExactInt v(static_cast<long>(k));
                out.push_back({v, v, k});
            }
            break;
        case Family::power_ratio: {
            // Defined through its convergent ratios (n+1)^n / n^n; the
            // coefficients are recovered by inversion and cleared to
            // integers level by level (which rescales p_n, q_n but keeps
            // every ratio).
            if (n_terms == 0) break;
            std::vector<ExactInt> p, q;
            p.reserve(n_terms + 1);
            q.reserve(n_terms + 1);
            for (std::size_t n = 0; n <= n_terms; ++n) {
                Convergent c = power_ratio_convergent(n);
                p.push_back(std::move(c.p));
                q.push_back(std::move(c.q));
            }
            InversionResult inv = invert(p, q);
            out.push_back({inv.a1, inv.b1, 1});
            for (const auto& t : clear_denominators(inv))
                out.push_back({t.a, t.b, t.n});
            break;
        }
    }
    return out;
}

}  // namespace

GCFSpec GCFSpec::family(Family f) { return GCFSpec(family_b0(f), f); }

GCFSpec GCFSpec::affine(ExactInt b0, AffineRule rule) {
    return GCFSpec(std::move(b0), std::move(rule));
}

GCFSpec GCFSpec::explicit_terms(ExactInt b0,
                                std::vector<std::pair<ExactInt, ExactInt>> ab_pairs) {
    std::vector<GCFTerm> list;
    list.reserve(ab_pairs.size());
    for (std::size_t i = 0; i < ab_pairs.size(); ++i) {
        if (ab_pairs[i].first.is_zero()) throw ZeroPartialNumerator(i + 1);
        list.push_back({std::move(ab_pairs[i].first), std::move(ab_pairs[i].second), i + 1});
    }
    return GCFSpec(std::move(b0), std::move(list));
}

std::optional<Family> GCFSpec::family_kind() const {
    if (const Family* f = std::get_if<Family>(&source_)) return *f;
    return std::nullopt;
}

std::vector<GCFTerm> terms(const GCFSpec& spec, std::size_t n_terms) {
    if (const auto* list = std::get_if<std::vector<GCFTerm>>(&spec.source_)) {
        if (list->size() < n_terms) throw InsufficientTerms(list->size(), n_terms);
        return {list->begin(), list->begin() + static_cast<std::ptrdiff_t>(n_terms)};
    }
    if (const Family* f = std::get_if<Family>(&spec.source_))
        return family_terms(*f, n_terms);

    const auto& rule = std::get<AffineRule>(spec.source_);
    std::vector<GCFTerm> out;
    out.reserve(n_terms);
    for (std::size_t k = 1; k <= n_terms; ++k) {
        ExactInt n(static_cast<long>(k));
        ExactInt a = rule.alpha * n + rule.beta;
        if (a.is_zero()) throw ZeroPartialNumerator(k);
        out.push_back({std::move(a), rule.gamma * n + rule.delta, k});
    }
    return out;
}

std::vector<Convergent> convergents(const GCFSpec& spec, std::size_t n_max) {
    std::vector<GCFTerm> ts = terms(spec, n_max);
    std::vector<Convergent> out;
    out.reserve(n_max + 1);

    ExactInt p_prev2(1), q_prev2(0);    // sentinel, index -1
    ExactInt p_prev = spec.b0();        // index 0
    ExactInt q_prev(1);
    out.push_back({0, p_prev, q_prev});
    for (std::size_t k = 1; k <= n_max; ++k) {
        const GCFTerm& t = ts[k - 1];
        ExactInt p_cur = t.b * p_prev;
        p_cur.addmul(t.a, p_prev2);
        ExactInt q_cur = t.b * q_prev;
        q_cur.addmul(t.a, q_prev2);
        out.push_back({static_cast<std::int64_t>(k), p_cur, q_cur});
        p_prev2 = std::move(p_prev);
        q_prev2 = std::move(q_prev);
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
    }
    return out;
}

ExactRational evaluate(const Convergent& c) {
    if (c.q.is_zero()) throw UndefinedConvergent(c.index);
    return {c.p, c.q};
}

GCFSpec simple_to_gcf(const std::vector<ExactInt>& coeffs) {
    if (coeffs.empty()) throw NotSimple(0);
    std::vector<std::pair<ExactInt, ExactInt>> ab;
    ab.reserve(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        if (coeffs[k].sign() < 1) throw NotSimple(k);
        ab.emplace_back(1, coeffs[k]);
    }
    return GCFSpec::explicit_terms(coeffs[0], std::move(ab));
}

GCFSpec euler_cf() { return GCFSpec::family(Family::euler); }
GCFSpec derangement_raw_cf() { return GCFSpec::family(Family::derangement_raw); }
GCFSpec derangement_elegant_cf() { return GCFSpec::family(Family::derangement_elegant); }
GCFSpec inv_e_minus_1_cf() { return GCFSpec::family(Family::inv_e_minus_1); }
GCFSpec power_ratio_cf() { return GCFSpec::family(Family::power_ratio); }

Convergent power_ratio_convergent(std::size_t n) {
    ExactInt p = pow(ExactInt(static_cast<long>(n + 1)), static_cast<unsigned long>(n));
    ExactInt q = pow(ExactInt(static_cast<long>(n)), static_cast<unsigned long>(n));
    return {static_cast<std::int64_t>(n), std::move(p), std::move(q)};
}

}  // namespace gcf
