#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gcf/analysis.hpp"
#include "gcf/cf.hpp"
#include "gcf/constants.hpp"
#include "gcf/derangement.hpp"
#include "gcf/errors.hpp"
#include "gcf/exact.hpp"
#include "gcf/invert.hpp"
#include "gcf/scan.hpp"
#include "gcf/sequence_file.hpp"

namespace {

// exit codes: 0 success, 1 usage or parse error, 2 mathematical degeneracy,
// 3 i/o failure
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDegenerate = 2;
constexpr int kIo = 3;

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gcf::IoError(path);
    out << bytes;
    if (!out) throw gcf::IoError(path);
}

int run_subfactorial(unsigned n, const std::string& method) {
    using gcf::SubfactorialMethod;
    if (method != "all") {
        auto m = gcf::method_from_name(method);
        switch (*m) {
            case SubfactorialMethod::rec1: std::cout << gcf::subfactorial_rec1(n); break;
            case SubfactorialMethod::rec2: std::cout << gcf::subfactorial_rec2(n); break;
            case SubfactorialMethod::sum: std::cout << gcf::subfactorial_sum(n); break;
            case SubfactorialMethod::nearest: std::cout << gcf::subfactorial_nearest(n); break;
        }
        std::cout << '\n';
        return kOk;
    }
    gcf::ExactInt values[4] = {gcf::subfactorial_rec1(n), gcf::subfactorial_rec2(n),
                               gcf::subfactorial_sum(n), gcf::subfactorial_nearest(n)};
    const char* names[4] = {"rec1", "rec2", "sum", "nearest"};
    bool agree = true;
    for (int i = 0; i < 4; ++i) {
        std::cout << names[i] << ' ' << values[i] << '\n';
        if (values[i] != values[0]) agree = false;
    }
    std::cout << (agree ? "AGREE" : "DISAGREE") << '\n';
    return agree ? kOk : kDegenerate;
}

int run_convergents(const gcf::GCFSpec& spec, unsigned n_max, bool values, unsigned digits) {
    for (const gcf::Convergent& c : gcf::convergents(spec, n_max)) {
        std::cout << c.index << ' ' << c.p << ' ' << c.q;
        if (c.q.is_zero()) {
            std::cout << " undefined\n";
            continue;
        }
        if (values) {
            gcf::ExactRational r = gcf::evaluate(c);
            std::cout << ' ' << r << ' ' << gcf::to_decimal(r, digits);
        }
        std::cout << '\n';
    }
    return kOk;
}

int run_invert(const std::string& p_path, const std::string& q_path) {
    std::vector<gcf::ExactInt> p = gcf::read_sequence_file(p_path);
    std::vector<gcf::ExactInt> q = gcf::read_sequence_file(q_path);
    gcf::InversionResult result = gcf::invert(p, q);
    std::cout << "b0 " << result.b0 << '\n';
    std::cout << "a1 " << result.a1 << '\n';
    std::cout << "b1 " << result.b1 << '\n';
    for (const gcf::ClearedTerm& t : gcf::clear_denominators(result)) {
        std::cout << t.n << ' ' << t.a << ' ' << t.b;
        if (t.rescaled) std::cout << " nonintegral";
        std::cout << '\n';
    }
    return kOk;
}

int run_error_table(std::vector<std::string> families, unsigned n_max, unsigned digits,
                    const std::string& csv_path, const std::string& svg_path) {
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()), families.end());

    gcf::ErrorTable table;
    table.digits_used = 0;
    table.families = families;
    for (const auto& name : families) {
        auto fam = gcf::family_from_name(name);
        unsigned used = 0;
        auto records =
            gcf::error_series(gcf::GCFSpec::family(*fam), "e", n_max, &used, digits);
        table.digits_used = std::max(table.digits_used, used);
        for (auto& r : records) table.records.push_back(std::move(r));
    }

    if (!csv_path.empty()) {
        std::ostringstream csv;
        gcf::emit_csv(table, csv);
        write_file(csv_path, csv.str());
    }
    if (!svg_path.empty()) {
        std::ostringstream svg;
        gcf::emit_svg(table, svg);
        write_file(svg_path, svg.str());
    }

    if (families.size() == 3) {
        gcf::OrderingReport report = gcf::check_error_ordering(3, n_max);
        if (report.holds)
            std::cout << "ordering holds for n in 3.." << n_max << '\n';
        else
            std::cout << "ordering fails at n=" << report.first_violation << '\n';
        return report.holds ? kOk : kDegenerate;
    }
    std::cout << "ordering check skipped (needs all three families)\n";
    return kOk;
}

int run_scan(long bound, unsigned depth, unsigned digits, const std::string& out_path) {
    gcf::ScanGrid grid{bound, depth, digits};
    std::vector<gcf::ConjectureHit> hits = gcf::run_scan(grid);
    std::ostringstream csv;
    gcf::emit_hits_csv(hits, csv);
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    std::cout << "hits: " << hits.size() << " (stable)\n";
    return kOk;
}

int run_quadrature(unsigned n, unsigned nodes) {
    double estimate = gcf::subfactorial_integral(n, nodes);
    gcf::ExactInt exact = gcf::subfactorial_rec1(n);
    // scale floor of 1 keeps the measure defined at !1 = 0
    double rel = std::fabs(estimate - exact.to_double()) / std::fmax(exact.to_double(), 1.0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", estimate);
    std::cout << "estimate " << buf << '\n';
    std::cout << "exact " << exact << '\n';
    std::snprintf(buf, sizeof buf, "%.3e", rel);
    std::cout << "relative-error " << buf << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for generalized continued fractions: subfactorials, "
                 "convergents, coefficient inversion, error tables and a small "
                 "conjecture scanner."};
    app.require_subcommand(1);

    auto* sub_sf = app.add_subcommand("subfactorial", "Compute !n; --method all cross-checks");
    unsigned sf_n = 0;
    std::string sf_method = "rec1";
    sub_sf->add_option("n", sf_n, "argument of !n")->required();
    sub_sf->add_option("--method", sf_method, "rec1|rec2|sum|nearest|all (default rec1)")
        ->check(CLI::IsMember({"rec1", "rec2", "sum", "nearest", "all"}));

    auto* sub_conv = app.add_subcommand("convergents", "Print p_n q_n of an expansion");
    std::string conv_family;
    std::vector<std::string> conv_files;
    std::string conv_b0 = "0";
    unsigned conv_n = 0;
    bool conv_values = false;
    unsigned conv_digits = 10;
    sub_conv->add_option("--family", conv_family,
                         "euler|derangement-raw|derangement-elegant|inv-e-minus-1|power-ratio");
    sub_conv->add_option("--terms-file", conv_files,
                         "two files: partial numerators a_n, partial denominators b_n")
        ->expected(2);
    sub_conv->add_option("--b0", conv_b0, "leading term for --terms-file input");
    sub_conv->add_option("--n", conv_n, "largest convergent index")->required();
    sub_conv->add_flag("--values", conv_values, "append reduced value and decimal rendering");
    sub_conv->add_option("--digits", conv_digits, "decimal places for --values (default 10)");

    auto* sub_inv = app.add_subcommand("invert", "Recover a_n b_n from p,q sequence files");
    std::string inv_p, inv_q;
    sub_inv->add_option("--p", inv_p, "numerator sequence file")->required();
    sub_inv->add_option("--q", inv_q, "denominator sequence file")->required();

    auto* sub_err = app.add_subcommand("error-table", "Per-family log10|r_n - e| table");
    std::vector<std::string> err_families = {"derangement-elegant", "euler", "power-ratio"};
    unsigned err_n = 0;
    unsigned err_digits = 50;
    std::string err_csv, err_svg;
    sub_err->add_option("--families", err_families, "subset of the three e-expansions")
        ->delimiter(',');
    sub_err->add_option("--n", err_n, "largest convergent index (>= 3)")->required();
    sub_err->add_option("--digits", err_digits,
                        "starting precision; escalates automatically (default 50)");
    sub_err->add_option("--csv", err_csv, "CSV output path");
    sub_err->add_option("--svg", err_svg, "SVG output path");

    auto* sub_scan = app.add_subcommand("scan", "Search affine rules matching known constants");
    long scan_bound = 0;
    unsigned scan_depth = 200;
    unsigned scan_digits = 20;
    std::string scan_out;
    sub_scan->add_option("--L", scan_bound, "coefficient bound (rules range over -L..L)")
        ->required();
    sub_scan->add_option("--depth", scan_depth, "convergent index used as limit (default 200)");
    sub_scan->add_option("--digits", scan_digits, "matching digits (default 20)");
    sub_scan->add_option("--out", scan_out, "hit CSV path (stdout when omitted)");

    auto* sub_quad = app.add_subcommand("quadrature", "Gauss-Laguerre check of the !n integral");
    unsigned quad_n = 0;
    unsigned quad_nodes = 0;
    sub_quad->add_option("n", quad_n, "argument of !n (<= 20)")->required();
    sub_quad->add_option("--nodes", quad_nodes, "quadrature nodes")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (sub_sf->parsed()) return run_subfactorial(sf_n, sf_method);
        if (sub_conv->parsed()) {
            bool have_family = !conv_family.empty();
            bool have_files = !conv_files.empty();
            if (have_family == have_files) {
                std::cerr << "error: need exactly one of --family or --terms-file\n";
                return kUsage;
            }
            if (have_family) {
                auto fam = gcf::family_from_name(conv_family);
                if (!fam) {
                    std::cerr << "error: unknown family \"" << conv_family << "\"\n";
                    return kUsage;
                }
                return run_convergents(gcf::GCFSpec::family(*fam), conv_n, conv_values,
                                       conv_digits);
            }
            auto a_seq = gcf::read_sequence_file(conv_files[0]);
            auto b_seq = gcf::read_sequence_file(conv_files[1]);
            if (a_seq.size() != b_seq.size()) {
                std::cerr << "error: term files differ in length (" << a_seq.size() << " vs "
                          << b_seq.size() << ")\n";
                return kUsage;
            }
            std::vector<std::pair<gcf::ExactInt, gcf::ExactInt>> ab;
            ab.reserve(a_seq.size());
            for (std::size_t i = 0; i < a_seq.size(); ++i)
                ab.emplace_back(std::move(a_seq[i]), std::move(b_seq[i]));
            gcf::GCFSpec spec =
                gcf::GCFSpec::explicit_terms(gcf::ExactInt(conv_b0), std::move(ab));
            return run_convergents(spec, conv_n, conv_values, conv_digits);
        }
        if (sub_inv->parsed()) return run_invert(inv_p, inv_q);
        if (sub_err->parsed()) {
            if (err_n < 3) {
                std::cerr << "error: --n must be >= 3\n";
                return kUsage;
            }
            for (const auto& f : err_families) {
                if (f != "derangement-elegant" && f != "euler" && f != "power-ratio") {
                    std::cerr << "error: --families accepts derangement-elegant, euler, "
                                 "power-ratio\n";
                    return kUsage;
                }
            }
            return run_error_table(err_families, err_n, err_digits, err_csv, err_svg);
        }
        if (sub_scan->parsed()) return run_scan(scan_bound, scan_depth, scan_digits, scan_out);
        if (sub_quad->parsed()) return run_quadrature(quad_n, quad_nodes);
        return kUsage;
    } catch (const gcf::DegenerateAt& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const gcf::ZeroPartialNumerator& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const gcf::InsufficientPrecision& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const gcf::NonIntegralResult& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDegenerate;
    } catch (const gcf::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const gcf::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const gcf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
