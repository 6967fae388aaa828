#include "gcf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gcf/constants.hpp"
#include "gcf/errors.hpp"

namespace gcf {

namespace {

constexpr unsigned kStartDigits = 50;
constexpr unsigned kDigitCap = 10000;

// Enclosures are reused across records of one series; recomputation per
// record would dominate the run.
class EnclosureCache {
public:
    explicit EnclosureCache(std::string target) : target_(std::move(target)) {}

    const CertifiedRational& at(unsigned digits) {
        auto it = cache_.find(digits);
        if (it == cache_.end())
            it = cache_.emplace(digits, constant_enclosure(target_, digits)).first;
        return it->second;
    }

private:
    std::string target_;
    std::map<unsigned, CertifiedRational> cache_;
};

// |value - target| as a certified interval [lo, hi] given the target's
// enclosure; lo is clamped at zero.
struct ErrInterval {
    ExactRational lo;
    ExactRational hi;
};

ErrInterval error_interval(const ExactRational& value, const CertifiedRational& c) {
    ExactRational d = abs(value - c.value);
    ExactRational lo = d - c.radius;
    if (lo.sign() < 0) lo = ExactRational(0);
    return {lo, d + c.radius};
}

// Smallest cached precision at which the enclosure radius drops below
// 10^-6 |value - midpoint|; throws past the digit cap.
std::pair<unsigned, ExactRational> measure_error(const ExactRational& value,
                                                 EnclosureCache& cache, unsigned start) {
    ExactRational million(ExactInt(1000000L));
    for (unsigned digits = start;; digits *= 2) {
        if (digits > kDigitCap)
            throw Error("error measurement exceeded the 10000-digit cap");
        const CertifiedRational& c = cache.at(digits);
        ExactRational diff = abs(value - c.value);
        if (!diff.is_zero() && c.radius * million < diff) return {digits, diff};
    }
}

std::vector<Convergent> series_convergents(const GCFSpec& spec, unsigned n_max) {
    if (spec.family_kind() == Family::power_ratio) {
        std::vector<Convergent> out;
        out.reserve(n_max);
        for (unsigned n = 1; n <= n_max; ++n) out.push_back(power_ratio_convergent(n));
        return out;
    }
    std::vector<Convergent> all = convergents(spec, n_max);
    return {all.begin() + 1, all.end()};
}

std::string spec_label(const GCFSpec& spec) {
    if (auto f = spec.family_kind()) return std::string(family_name(*f));
    return "custom";
}

const char* dash_pattern(const std::string& family) {
    if (family == "power-ratio") return "10 5";
    if (family == "euler") return "2 4";
    return "";  // solid
}

}  // namespace

std::vector<ErrorRecord> error_series(const GCFSpec& spec, const std::string& target,
                                      unsigned n_max, unsigned* digits_used,
                                      unsigned start_digits) {
    unsigned start = std::max(start_digits, kStartDigits);
    EnclosureCache cache(target);
    cache.at(start);  // validates the target name up front

    std::string label = spec_label(spec);
    std::vector<ErrorRecord> out;
    unsigned max_digits = start;
    for (const Convergent& c : series_convergents(spec, n_max)) {
        if (c.q.is_zero()) continue;  // undefined convergent, no error to report
        ExactRational value = evaluate(c);
        auto [digits, diff] = measure_error(value, cache, start);
        max_digits = std::max(max_digits, digits);
        out.push_back({label, static_cast<unsigned>(c.index), c.p, c.q, log10_abs(diff)});
    }
    if (digits_used) *digits_used = max_digits;
    return out;
}

ErrorTable compare_families(unsigned n_max, unsigned start_digits) {
    if (n_max < 3) throw std::invalid_argument("family comparison needs n_max >= 3");
    ErrorTable table;
    table.families = {"derangement-elegant", "euler", "power-ratio"};
    table.digits_used = 0;
    for (const auto& name : table.families) {
        unsigned used = 0;
        auto records = error_series(GCFSpec::family(*family_from_name(name)), "e", n_max,
                                    &used, start_digits);
        table.digits_used = std::max(table.digits_used, used);
        for (auto& r : records) table.records.push_back(std::move(r));
    }
    return table;
}

OrderingReport check_error_ordering(unsigned lo, unsigned hi) {
    GCFSpec elegant = derangement_elegant_cf();
    GCFSpec euler = euler_cf();
    EnclosureCache cache("e");

    auto elegant_conv = series_convergents(elegant, hi);
    auto euler_conv = series_convergents(euler, hi);

    for (unsigned n = lo; n <= hi; ++n) {
        ExactRational r_elegant = evaluate(elegant_conv[n - 1]);
        ExactRational r_euler = evaluate(euler_conv[n - 1]);
        ExactRational r_power = evaluate(power_ratio_convergent(n));
        for (unsigned digits = kStartDigits;; digits *= 2) {
            if (digits > kDigitCap) return {false, n};
            const CertifiedRational& c = cache.at(digits);
            ErrInterval e1 = error_interval(r_elegant, c);
            ErrInterval e2 = error_interval(r_euler, c);
            ErrInterval e3 = error_interval(r_power, c);
            if (e1.hi < e2.lo && e2.hi < e3.lo) break;  // certified in order
            if (e1.lo >= e2.hi || e2.lo >= e3.hi) return {false, n};  // certified violation
            // intervals overlap: not decidable yet, tighten
        }
    }
    return {true, 0};
}

std::string format_significant9(double v) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    std::string s(buf);
    std::size_t epos = s.find('e');
    std::string mantissa = s.substr(0, epos);
    int exp10 = std::atoi(s.c_str() + epos + 1);
    bool negative = !mantissa.empty() && mantissa[0] == '-';
    if (negative) mantissa.erase(0, 1);
    std::string digits = mantissa.substr(0, 1) + mantissa.substr(2);  // drop the '.'

    std::string body;
    if (exp10 >= 0 && exp10 <= 8) {
        body = digits.substr(0, static_cast<std::size_t>(exp10) + 1);
        if (exp10 < 8) body += "." + digits.substr(static_cast<std::size_t>(exp10) + 1);
    } else if (exp10 < 0 && exp10 >= -9) {
        body = "0." + std::string(static_cast<std::size_t>(-exp10) - 1, '0') + digits;
    } else {
        body = s.substr(negative ? 1 : 0);  // extreme magnitude: keep scientific
    }
    return negative ? "-" + body : body;
}

void emit_csv(const ErrorTable& table, std::ostream& out) {
    out << "family,n,p,q,log10_err\n";
    for (const auto& r : table.records)
        out << r.family << ',' << r.n << ',' << r.p << ',' << r.q << ','
            << format_significant9(r.log10_err) << '\n';
}

ErrorTable parse_csv(std::istream& in) {
    ErrorTable table;
    table.digits_used = 0;
    std::string line;
    if (!std::getline(in, line) || line != "family,n,p,q,log10_err")
        throw Error("not an error-table CSV");
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string family, n, p, q, err;
        if (!std::getline(row, family, ',') || !std::getline(row, n, ',') ||
            !std::getline(row, p, ',') || !std::getline(row, q, ',') ||
            !std::getline(row, err))
            throw Error("malformed CSV row at line " + std::to_string(lineno));
        table.records.push_back({family, static_cast<unsigned>(std::stoul(n)), ExactInt(p),
                                 ExactInt(q), std::strtod(err.c_str(), nullptr)});
        if (table.families.empty() || table.families.back() != family)
            table.families.push_back(family);
    }
    return table;
}

void emit_svg(const ErrorTable& table, std::ostream& out) {
    if (table.records.empty()) throw EmptyTable();

    constexpr double width = 640, height = 480;
    constexpr double ml = 70, mr = 20, mt = 20, mb = 50;

    double n_min = table.records.front().n, n_max = n_min;
    double v_min = table.records.front().log10_err, v_max = v_min;
    for (const auto& r : table.records) {
        n_min = std::min(n_min, static_cast<double>(r.n));
        n_max = std::max(n_max, static_cast<double>(r.n));
        v_min = std::min(v_min, r.log10_err);
        v_max = std::max(v_max, r.log10_err);
    }
    double n_span = n_max > n_min ? n_max - n_min : 1.0;
    double v_span = v_max > v_min ? v_max - v_min : 1.0;

    auto sx = [&](double n) { return ml + (n - n_min) / n_span * (width - ml - mr); };
    auto sy = [&](double v) { return mt + (v_max - v) / v_span * (height - mt - mb); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    // axes
    out << "  <line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\"" << num(ml)
        << "\" y2=\"" << num(height - mb) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << num(ml) << "\" y1=\"" << num(height - mb) << "\" x2=\""
        << num(width - mr) << "\" y2=\"" << num(height - mb) << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << num((ml + width - mr) / 2) << "\" y=\"" << num(height - 12)
        << "\" text-anchor=\"middle\" font-size=\"14\">n</text>\n";
    out << "  <text x=\"16\" y=\"" << num((mt + height - mb) / 2)
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
        << num((mt + height - mb) / 2) << ")\">log10 error</text>\n";
    out << "  <text x=\"" << num(ml - 6) << "\" y=\"" << num(sy(v_max) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << num(v_max) << "</text>\n";
    out << "  <text x=\"" << num(ml - 6) << "\" y=\"" << num(sy(v_min) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << num(v_min) << "</text>\n";
    out << "  <text x=\"" << num(sx(n_min)) << "\" y=\"" << num(height - mb + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << num(n_min) << "</text>\n";
    out << "  <text x=\"" << num(sx(n_max)) << "\" y=\"" << num(height - mb + 16)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << num(n_max) << "</text>\n";

    // one polyline per family, records already sorted by (family, n)
    std::size_t i = 0;
    while (i < table.records.size()) {
        const std::string& family = table.records[i].family;
        out << "  <polyline fill=\"none\" stroke=\"black\"";
        const char* dash = dash_pattern(family);
        if (*dash) out << " stroke-dasharray=\"" << dash << "\"";
        out << " points=\"";
        bool first = true;
        for (; i < table.records.size() && table.records[i].family == family; ++i) {
            if (!first) out << ' ';
            out << num(sx(table.records[i].n)) << ',' << num(sy(table.records[i].log10_err));
            first = false;
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace gcf
