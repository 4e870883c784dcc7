#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cpchart/checks.hpp"
#include "cpchart/connection.hpp"
#include "cpchart/manifest.hpp"
#include "cpchart/parser.hpp"
#include "cpchart/report.hpp"

namespace {

using namespace cpchart;

// Requires inputs beyond what the manifest's own check list forced.
void require(bool present, const std::string& what) {
    if (!present) throw ManifestError("this command needs a " + what + " in the manifest");
}

int run_check(const Manifest& m, const std::string& report_path, const std::string& format) {
    CheckReport rep = run_checks(m);
    std::string text;
    if (format == "structured") {
        text = emit_structured(rep);
    } else {
        std::ostringstream os;
        emit_text(rep, os);
        text = os.str();
    }
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report to '" << report_path << "'\n";
            return 2;
        }
        out << text;
    }
    return rep.overall == Status::pass ? 0 : 1;
}

std::string form_sum(const ChartPtr& chart, const std::vector<Expr>& comp) {
    std::string out;
    for (int c = 0; c < chart->dim(); ++c) {
        if (comp[static_cast<size_t>(c)].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + comp[static_cast<size_t>(c)].str() + ")*" + chart->cobasis_name(c);
    }
    return out.empty() ? "0" : out;
}

int run_christoffels(const Manifest& m) {
    require(m.poisson.has_value(), "[poisson] matrix");
    require(m.cotangent.has_value(), "[cotangent_metric] matrix");
    Connection conn = levi_civita(*m.cotangent, *m.poisson);
    const ChartPtr& chart = m.chart;
    for (int a = 0; a < chart->dim(); ++a)
        for (int b = 0; b < chart->dim(); ++b) {
            OneForm row = conn.derive_basis(a, b);
            std::cout << "D_{" << chart->cobasis_name(a) << "} " << chart->cobasis_name(b)
                      << " = " << form_sum(chart, row.comp) << "\n";
        }
    return 0;
}

int run_dpi(const Manifest& m) {
    require(m.poisson.has_value(), "[poisson] matrix");
    require(m.cotangent.has_value(), "[cotangent_metric] matrix");
    Connection conn = levi_civita(*m.cotangent, *m.poisson);
    DPiTensor t = d_pi(conn);
    const ChartPtr& chart = m.chart;
    for (int a = 0; a < chart->dim(); ++a)
        for (int b = 0; b < chart->dim(); ++b)
            for (int c = b + 1; c < chart->dim(); ++c)
                std::cout << "(D_{" << chart->cobasis_name(a) << "} pi)(" << chart->cobasis_name(b)
                          << ", " << chart->cobasis_name(c) << ") = " << t.at(a, b, c).str()
                          << "\n";
    std::cout << "D pi = 0: " << (t.is_zero() ? "yes" : "no") << "\n";
    return 0;
}

// Bracket arguments are either names from the manifest's [functions] section
// or inline expressions.
Expr named_or_parsed(const Manifest& m, const std::string& text) {
    auto it = m.functions.find(text);
    return it != m.functions.end() ? it->second : parse_expr(text, m.chart->vars);
}

int run_bracket(const Manifest& m, const std::string& f_text, const std::string& g_text) {
    require(m.poisson.has_value(), "[poisson] matrix");
    std::cout << bracket(*m.poisson, named_or_parsed(m, f_text), named_or_parsed(m, g_text)).str()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic checks for (1,1) Poisson structures on a single chart"};
    app.require_subcommand(1);

    std::string manifest_path;
    std::string report_path;
    std::string format = "text";
    std::string f_text, g_text;
    std::uint64_t seed = 0;
    int samples = 0;
    double tol = 0;

    auto* check = app.add_subcommand("check", "run the checks listed in a manifest");
    check->add_option("manifest", manifest_path, "manifest file")->required();
    check->add_option("--report", report_path, "write the report to a file instead of stdout");
    check->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));
    auto* seed_opt = check->add_option("--seed", seed, "override the sampling seed");
    auto* samples_opt = check->add_option("--samples", samples, "override the sample count")
                            ->check(CLI::Range(1, 100000));
    auto* tol_opt = check->add_option("--tol", tol, "override the relative tolerance")
                        ->check(CLI::PositiveNumber);

    auto* chris = app.add_subcommand("christoffels", "print the contravariant Christoffel table");
    chris->add_option("manifest", manifest_path, "manifest file")->required();

    auto* dpi = app.add_subcommand("dpi", "print the components of D pi");
    dpi->add_option("manifest", manifest_path, "manifest file")->required();

    auto* br = app.add_subcommand("bracket", "print the Poisson bracket {f,g}");
    br->add_option("manifest", manifest_path, "manifest file")->required();
    br->add_option("-f,--first", f_text, "first argument: an expression or a [functions] name")
        ->required();
    br->add_option("-g,--second", g_text, "second argument: an expression or a [functions] name")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cpchart::Manifest m = cpchart::load_manifest(manifest_path);
        if (*seed_opt) m.numeric.seed = seed;
        if (*samples_opt) m.numeric.samples = samples;
        if (*tol_opt) m.numeric.rel_tol = tol;

        if (check->parsed()) return run_check(m, report_path, format);
        if (chris->parsed()) return run_christoffels(m);
        if (dpi->parsed()) return run_dpi(m);
        if (br->parsed()) return run_bracket(m, f_text, g_text);
        return 2;
    } catch (const cpchart::ManifestError& e) {
        std::cerr << "manifest error: " << e.what() << "\n";
        return 2;
    } catch (const cpchart::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
