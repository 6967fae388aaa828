#include <doctest.h>

#include <random>
#include <vector>

#include "gcf/cf.hpp"
#include "gcf/derangement.hpp"
#include "gcf/errors.hpp"
#include "gcf/exact.hpp"
#include "gcf/invert.hpp"

using namespace gcf;

namespace {

std::vector<ExactInt> int_seq(std::initializer_list<long> xs) {
    std::vector<ExactInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// round trip: invert a recurrence-generated sequence and rebuild it
void check_round_trip(const GCFSpec& spec, unsigned n_max) {
    auto cs = convergents(spec, n_max);
    std::vector<ExactInt> p, q;
    for (const auto& c : cs) {
        p.push_back(c.p);
        q.push_back(c.q);
    }
    InversionResult inv = invert(p, q);
    for (const auto& t : inv.tail) CHECK(t.integral);
    auto rebuilt = reconstruct(inv, n_max);
    REQUIRE(rebuilt.size() == n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        CHECK(rebuilt[n].first == ExactRational(p[n]));
        CHECK(rebuilt[n].second == ExactRational(q[n]));
    }
}

}  // namespace

TEST_CASE("inverting the (1+1/n)^n convergents") {
    std::vector<ExactInt> p, q;
    for (unsigned n = 0; n <= 6; ++n) {
        Convergent c = power_ratio_convergent(n);
        p.push_back(c.p);
        q.push_back(c.q);
    }
    CHECK(p == int_seq({1, 2, 9, 64, 625, 7776, 117649}));
    CHECK(q == int_seq({1, 1, 4, 27, 256, 3125, 46656}));

    InversionResult inv = invert(p, q);
    CHECK(inv.b0 == ExactInt(1));
    CHECK(inv.a1 == ExactInt(1));
    CHECK(inv.b1 == ExactInt(1));
    REQUIRE(inv.tail.size() == 5);

    // the exact determinant ratios turn non-integral from n = 4 on
    CHECK(inv.tail[0].a == ExactRational(-1));
    CHECK(inv.tail[0].b == ExactRational(5));
    CHECK(inv.tail[0].integral);
    CHECK(inv.tail[1].a == ExactRational(-13));
    CHECK(inv.tail[1].b == ExactRational(10));
    CHECK(inv.tail[1].integral);
    CHECK(inv.tail[2].a == ExactRational(ExactInt(-491), ExactInt(13)));
    CHECK(inv.tail[2].b == ExactRational(ExactInt(196), ExactInt(13)));
    CHECK(!inv.tail[2].integral);
    CHECK(inv.tail[3].a == ExactRational(ExactInt(-37531), ExactInt(491)));
    CHECK(!inv.tail[3].integral);

    // the rational result still rebuilds the input exactly
    auto rebuilt = reconstruct(inv, 6);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(rebuilt[n].first == ExactRational(p[n]));
        CHECK(rebuilt[n].second == ExactRational(q[n]));
    }

    // clearing denominators yields the printed integer expansion
    auto cleared = clear_denominators(inv);
    REQUIRE(cleared.size() == 5);
    long want[5][2] = {{-1, 5}, {-13, 10}, {-491, 196}, {-487903, 9952}, {0, 958144}};
    for (std::size_t i = 0; i < 5; ++i) {
        if (i < 4) CHECK(cleared[i].a == ExactInt(want[i][0]));
        CHECK(cleared[i].b == ExactInt(want[i][1]));
    }
    CHECK(cleared[4].a == ExactInt("-2384329879"));
    CHECK(!cleared[0].rescaled);
    CHECK(!cleared[1].rescaled);
    CHECK(cleared[2].rescaled);
    CHECK(cleared[3].rescaled);
    CHECK(cleared[4].rescaled);
}

TEST_CASE("inverting factorial/subfactorial recovers a_n = b_n = n-1") {
    std::vector<ExactInt> p, q;
    for (unsigned n = 0; n <= 7; ++n) {
        p.push_back(factorial(n));
        q.push_back(subfactorial_rec1(n));
    }
    InversionResult inv = invert(p, q);
    CHECK(inv.b0 == ExactInt(1));
    CHECK(inv.a1 == ExactInt(1));
    CHECK(inv.b1 == ExactInt(0));
    REQUIRE(inv.tail.size() == 6);
    for (const auto& t : inv.tail) {
        CHECK(t.integral);
        CHECK(t.a == ExactRational(ExactInt(static_cast<long>(t.n) - 1)));
        CHECK(t.b == t.a);
    }
}

TEST_CASE("repeated convergents are linearly dependent") {
    for (long c : {1L, 7L, -3L}) {
        std::vector<ExactInt> p = {ExactInt(c), ExactInt(c), ExactInt(c)};
        std::vector<ExactInt> q = {1, 1, 1};
        CHECK_THROWS_AS(invert(p, q), DegenerateAt);
        try {
            invert(p, q);
        } catch (const DegenerateAt& e) {
            CHECK(e.index == 2);
            CHECK(std::string(e.what()) == "degenerate at n=2");
        }
    }
}

TEST_CASE("length preconditions") {
    CHECK_THROWS_AS(invert(int_seq({1}), int_seq({1})), std::invalid_argument);
    CHECK_THROWS_AS(invert(int_seq({1, 2}), int_seq({1})), std::invalid_argument);
    // exactly two entries: starting values only, empty tail
    InversionResult inv = invert(int_seq({2, 3}), int_seq({1, 1}));
    CHECK(inv.b0 == ExactInt(2));
    CHECK(inv.a1 == ExactInt(1));
    CHECK(inv.b1 == ExactInt(1));
    CHECK(inv.tail.empty());
}

TEST_CASE("inversion from ratios recovers the euler prefix") {
    std::vector<ExactRational> r = {ExactRational(2), ExactRational(3),
                                    ExactRational(ExactInt(8), ExactInt(3)),
                                    ExactRational(ExactInt(11), ExactInt(4))};
    InversionResult inv = invert_rationals(r);
    CHECK(inv.b0 == ExactInt(2));
    CHECK(inv.a1 == ExactInt(1));
    CHECK(inv.b1 == ExactInt(1));
    REQUIRE(inv.tail.size() == 2);
    CHECK(inv.tail[0].a == ExactRational(1));
    CHECK(inv.tail[0].b == ExactRational(2));
    CHECK(inv.tail[1].a == ExactRational(1));
    CHECK(inv.tail[1].b == ExactRational(1));
}

TEST_CASE("constant ratios degenerate immediately") {
    std::vector<ExactRational> r = {ExactRational(1), ExactRational(1), ExactRational(1)};
    CHECK_THROWS_AS(invert_rationals(r), DegenerateAt);
}

TEST_CASE("reduction changes the recovered coefficients") {
    // the elegant family's raw convergents share factors (gcd(24, 9) = 3),
    // so inverting the reduced ratios recovers a different expansion of the
    // same values - not (2,2),(3,3),(4,4)
    auto cs = convergents(derangement_elegant_cf(), 4);
    bool some_common_factor = false;
    std::vector<ExactRational> r;
    for (const auto& c : cs) {
        if (gcd(c.p, c.q) > ExactInt(1)) some_common_factor = true;
        r.push_back(evaluate(c));
    }
    CHECK(some_common_factor);

    InversionResult inv = invert_rationals(r);
    CHECK(inv.b0 == ExactInt(2));
    CHECK(inv.a1 == ExactInt(1));
    CHECK(inv.b1 == ExactInt(1));
    REQUIRE(inv.tail.size() == 3);
    long want[3][2] = {{1, 2}, {2, 3}, {3, 4}};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(inv.tail[i].a == ExactRational(want[i][0]));
        CHECK(inv.tail[i].b == ExactRational(want[i][1]));
    }

    // and the round-trip law still rebuilds the reduced inputs exactly
    auto rebuilt = reconstruct(inv, 4);
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(rebuilt[n].first == ExactRational(r[n].num()));
        CHECK(rebuilt[n].second == ExactRational(r[n].den()));
    }
}

TEST_CASE("round trip across the built-in families") {
    for (Family f : {Family::euler, Family::derangement_raw, Family::derangement_elegant,
                     Family::inv_e_minus_1, Family::power_ratio})
        check_round_trip(GCFSpec::family(f), 25);
}

TEST_CASE("round trip from reduced ratios") {
    // positive coefficients keep every q_n nonzero, so all ratios exist;
    // inverting them must rebuild the reduced pairs exactly
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> a_dist(1, 9);
    std::uniform_int_distribution<long> b_dist(1, 9);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::pair<ExactInt, ExactInt>> ab;
        for (int k = 0; k < 15; ++k) ab.emplace_back(a_dist(rng), b_dist(rng));
        GCFSpec spec = GCFSpec::explicit_terms(b_dist(rng), std::move(ab));
        std::vector<ExactRational> ratios;
        for (const auto& c : convergents(spec, 15)) ratios.push_back(evaluate(c));
        InversionResult inv = invert_rationals(ratios);
        auto rebuilt = reconstruct(inv, 15);
        for (unsigned n = 0; n <= 15; ++n) {
            CHECK(rebuilt[n].first == ExactRational(ratios[n].num()));
            CHECK(rebuilt[n].second == ExactRational(ratios[n].den()));
        }
    }
}

TEST_CASE("round trip on random explicit term lists") {
    std::mt19937 rng(20250809);
    std::uniform_int_distribution<long> a_dist(1, 9);
    std::uniform_int_distribution<long> b_dist(-9, 9);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<ExactInt, ExactInt>> ab;
        for (int k = 0; k < 25; ++k) {
            long a = a_dist(rng) * (flip(rng) ? 1 : -1);
            ab.emplace_back(a, b_dist(rng));
        }
        GCFSpec spec = GCFSpec::explicit_terms(b_dist(rng), std::move(ab));
        check_round_trip(spec, 25);
    }
}

TEST_CASE("reconstruct guards its range") {
    InversionResult inv = invert(int_seq({2, 3}), int_seq({1, 1}));
    CHECK_THROWS_AS(reconstruct(inv, 2), std::invalid_argument);
}
