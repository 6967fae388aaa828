#include <doctest.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gcf/errors.hpp"
#include "gcf/scan.hpp"

using namespace gcf;

namespace {

bool has_rule(const std::vector<ConjectureHit>& hits, long b0, long alpha, long beta,
              long gamma, long delta, const std::string& constant) {
    for (const auto& h : hits)
        if (h.b0 == b0 && h.alpha == alpha && h.beta == beta && h.gamma == gamma &&
            h.delta == delta && h.constant == constant)
            return true;
    return false;
}

}  // namespace

TEST_CASE("grid guards") {
    CHECK_THROWS_AS(run_scan({13, 200, 20}), GridTooLarge);
    CHECK_THROWS_AS(run_scan({1, 5, 20}), std::invalid_argument);
    CHECK_THROWS_AS(run_scan({1, 200, 5}), std::invalid_argument);
}

TEST_CASE("the all-zero bound yields nothing") {
    CHECK(run_scan({0, 200, 20}).empty());
}

TEST_CASE("a small scan rediscovers the derangement and reciprocal expansions") {
    ScanGrid grid{2, 200, 20};
    auto hits = run_scan(grid);

    // a_n = b_n = n + 1 with leading 2 converges to e
    CHECK(has_rule(hits, 2, 1, 1, 1, 1, "e"));
    // a_n = b_n = n with leading 0 converges to 1/(e-1)
    CHECK(has_rule(hits, 0, 1, 0, 1, 0, "1/(e-1)"));

    for (const auto& h : hits) {
        CHECK(h.stable);
        CHECK(h.residual_log10 <= -20.0);
    }

    // sorted lexicographically by rule, then constant
    for (std::size_t i = 1; i < hits.size(); ++i) {
        const auto& a = hits[i - 1];
        const auto& b = hits[i];
        auto ka = std::tie(a.b0, a.alpha, a.beta, a.gamma, a.delta, a.constant);
        auto kb = std::tie(b.b0, b.alpha, b.beta, b.gamma, b.delta, b.constant);
        CHECK(ka < kb);
    }

    // every hit survives an independent recheck at more digits
    for (const auto& h : hits) CHECK(verify_hit(h, 30));

    // determinism: identical grids give byte-identical emission
    auto hits2 = run_scan(grid);
    std::ostringstream a, b;
    emit_hits_csv(hits, a);
    emit_hits_csv(hits2, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("b0,alpha,beta,gamma,delta,constant,residual_log10\n", 0) == 0);
}

TEST_CASE("verification at high precision accepts the proven expansions") {
    ConjectureHit elegant{2, 1, 1, 1, 1, "e", -30.0, true};
    CHECK(verify_hit(elegant, 40));
    ConjectureHit reciprocal{0, 1, 0, 1, 0, "1/(e-1)", -30.0, true};
    CHECK(verify_hit(reciprocal, 40));
    // a rule converging to a different value (sqrt 2) never checks out
    // against e, however deep it is pushed
    ConjectureHit bogus{1, 0, 1, 0, 2, "e", -30.0, true};
    CHECK(!verify_hit(bogus, 40));
}
