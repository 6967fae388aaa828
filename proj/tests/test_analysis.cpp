#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gcf/analysis.hpp"
#include "gcf/cf.hpp"
#include "gcf/errors.hpp"

using namespace gcf;

namespace {

// minimal structural well-formedness scan: prolog, balanced tags, quotes
bool xml_well_formed(const std::string& doc) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    if (doc.rfind("<?xml", 0) == 0) {
        i = doc.find("?>");
        if (i == std::string::npos) return false;
        i += 2;
    }
    while (i < doc.size()) {
        if (doc[i] != '<') {
            ++i;
            continue;
        }
        std::size_t close = doc.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = doc.substr(i + 1, close - i - 1);
        if (tag.empty()) return false;
        if ((std::count(tag.begin(), tag.end(), '"') % 2) != 0) return false;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else if (tag.back() != '/') {
            stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
        }
        i = close + 1;
    }
    return stack.empty();
}

std::size_t count_occurrences(const std::string& s, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos;
         pos = s.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("error series for the slow power-ratio expansion") {
    auto records = error_series(power_ratio_cf(), "e", 5);
    REQUIRE(records.size() == 5);
    CHECK(records[4].family == "power-ratio");
    CHECK(records[4].n == 5);
    CHECK(records[4].p == ExactInt(7776));
    CHECK(records[4].q == ExactInt(3125));
    CHECK(records[4].log10_err == doctest::Approx(-0.638344246875).epsilon(1e-6));
}

TEST_CASE("error series of the euler expansion starts at |3 - e|") {
    auto records = error_series(euler_cf(), "e", 1);
    REQUIRE(records.size() == 1);
    CHECK(records[0].log10_err == doctest::Approx(-0.550185139008).epsilon(1e-6));
}

TEST_CASE("elegant expansion errors fall strictly") {
    auto records = error_series(derangement_elegant_cf(), "e", 3);
    REQUIRE(records.size() == 3);
    CHECK(records[1].log10_err == doctest::Approx(-1.28722270698).epsilon(1e-6));
    CHECK(records[0].log10_err > records[1].log10_err);
    CHECK(records[1].log10_err > records[2].log10_err);
}

TEST_CASE("undefined convergents are skipped") {
    auto records = error_series(derangement_raw_cf(), "e", 3);
    REQUIRE(records.size() == 2);  // index 1 has q = 0
    CHECK(records[0].n == 2);
    CHECK(records[1].n == 3);
}

TEST_CASE("unknown target is rejected") {
    CHECK_THROWS_AS(error_series(euler_cf(), "tau", 3), UnknownTarget);
}

TEST_CASE("family comparison table shape") {
    ErrorTable table = compare_families(3);
    CHECK(table.families ==
          std::vector<std::string>{"derangement-elegant", "euler", "power-ratio"});
    REQUIRE(table.records.size() == 9);
    for (std::size_t i = 1; i < table.records.size(); ++i) {
        const auto& a = table.records[i - 1];
        const auto& b = table.records[i];
        CHECK((a.family < b.family || (a.family == b.family && a.n < b.n)));
    }
    CHECK_THROWS_AS(compare_families(2), std::invalid_argument);
}

TEST_CASE("certified error ordering of the three expansions") {
    OrderingReport report = check_error_ordering(3, 12);
    CHECK(report.holds);
}

TEST_CASE("per-family convergence shapes over a longer run") {
    auto elegant = error_series(derangement_elegant_cf(), "e", 30);
    auto power = error_series(power_ratio_cf(), "e", 30);
    auto euler = error_series(euler_cf(), "e", 30);
    REQUIRE(elegant.size() == 30);
    REQUIRE(power.size() == 30);
    REQUIRE(euler.size() == 30);
    for (unsigned n = 2; n <= 30; ++n) {
        CHECK(elegant[n - 1].log10_err < elegant[n - 2].log10_err);
        CHECK(power[n - 1].log10_err < power[n - 2].log10_err);
    }
    // euler has a period-3 texture; require decrease across 3-wide windows
    for (unsigned n = 1; n + 3 <= 30; ++n)
        CHECK(euler[n + 2].log10_err < euler[n - 1].log10_err);
    // elegant error is far below 1e-25 by n = 30
    CHECK(elegant[29].log10_err < -25.0);
}

TEST_CASE("nine significant digits, positional") {
    CHECK(format_significant9(-0.550185139008411) == "-0.550185139");
    CHECK(format_significant9(-3.0) == "-3.00000000");
    CHECK(format_significant9(0.5) == "0.500000000");
    CHECK(format_significant9(12345.678) == "12345.6780");
    CHECK(format_significant9(123456789.0) == "123456789");
    CHECK(format_significant9(-36.0826960) == "-36.0826960");
    CHECK(format_significant9(0.000123456789) == "0.000123456789");
}

TEST_CASE("csv golden bytes") {
    ErrorTable table;
    table.digits_used = 50;
    table.families = {"euler"};

    std::ostringstream empty;
    emit_csv({{}, 0, {}}, empty);
    CHECK(empty.str() == "family,n,p,q,log10_err\n");

    auto records = error_series(euler_cf(), "e", 1);
    table.records = records;
    std::ostringstream one;
    emit_csv(table, one);
    CHECK(one.str() == "family,n,p,q,log10_err\neuler,1,3,1,-0.550185139\n");
}

TEST_CASE("csv round-trips exactly") {
    ErrorTable table = compare_families(6);
    std::ostringstream out;
    emit_csv(table, out);
    std::istringstream in(out.str());
    ErrorTable back = parse_csv(in);
    REQUIRE(back.records.size() == table.records.size());
    for (std::size_t i = 0; i < table.records.size(); ++i) {
        CHECK(back.records[i].family == table.records[i].family);
        CHECK(back.records[i].n == table.records[i].n);
        CHECK(back.records[i].p == table.records[i].p);
        CHECK(back.records[i].q == table.records[i].q);
        CHECK(format_significant9(back.records[i].log10_err) ==
              format_significant9(table.records[i].log10_err));
    }
    std::ostringstream again;
    emit_csv(back, again);
    CHECK(again.str() == out.str());
}

TEST_CASE("svg structure") {
    ErrorTable table = compare_families(4);
    std::ostringstream out;
    emit_svg(table, out);
    std::string svg = out.str();
    CHECK(count_occurrences(svg, "<polyline") == 3);
    CHECK(count_occurrences(svg, "stroke-dasharray") == 2);  // dashed + dotted
    CHECK(xml_well_formed(svg));

    ErrorTable single;
    single.digits_used = 50;
    single.families = {"euler"};
    single.records = error_series(euler_cf(), "e", 4);
    std::ostringstream one;
    emit_svg(single, one);
    CHECK(count_occurrences(one.str(), "<polyline") == 1);
    CHECK(xml_well_formed(one.str()));

    CHECK_THROWS_AS(emit_svg({{}, 0, {}}, out), EmptyTable);
}

TEST_CASE("emission is deterministic") {
    ErrorTable t1 = compare_families(5);
    ErrorTable t2 = compare_families(5);
    std::ostringstream a, b, c, d;
    emit_csv(t1, a);
    emit_csv(t2, b);
    CHECK(a.str() == b.str());
    emit_svg(t1, c);
    emit_svg(t2, d);
    CHECK(c.str() == d.str());
}
