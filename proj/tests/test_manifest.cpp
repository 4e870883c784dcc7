#include "doctest.h"

#include "cpchart/checks.hpp"
#include "cpchart/manifest.hpp"
#include "cpchart/report.hpp"

using namespace cpchart;

namespace {

const char* kMinimal = R"(
[chart]
dimension = 1

[poisson]
matrix = [["2i*z1*zb1"]]

[checks]
names = ["jacobi", "reality"]
)";

}  // namespace

TEST_CASE("minimal manifest parses with defaults") {
    Manifest m = parse_manifest(kMinimal, "mem");
    CHECK(m.chart->n == 1);
    CHECK(m.chart->origin_excluded == std::vector<bool>{false});
    REQUIRE(m.poisson.has_value());
    CHECK(m.checks.size() == 2);
    CHECK(m.numeric.seed == 42);
    CHECK(m.numeric.samples == 20);
    CHECK(m.numeric.rel_tol == 1e-6);
}

TEST_CASE("sections, comments, and multi-line arrays") {
    const char* text = R"(
# leading comment
[chart]
dimension = 2                  # complex dimension
origin_excluded = [true, false]
constants = ["c"]

[poisson]
matrix = [
  ["c*z1*zb1", "0"],           # row 1
  ["0", "1i"],
]

[numeric]
seed = 7
samples = 5
rel_tol = 1e-9

[checks]
names = ["jacobi"]
)";
    Manifest m = parse_manifest(text, "mem");
    CHECK(m.chart->n == 2);
    CHECK(m.chart->origin_excluded == std::vector<bool>{true, false});
    CHECK(m.numeric.seed == 7);
    CHECK(m.numeric.samples == 5);
    CHECK(m.numeric.rel_tol == 1e-9);
    CHECK(equals(m.poisson->B[1][1], Expr::imaginary_unit(m.chart->vars)));
}

TEST_CASE("validation failures carry context") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        try {
            parse_manifest(text, "mem");
            FAIL_CHECK("expected ManifestError containing '" << fragment << "'");
        } catch (const ManifestError& e) {
            std::string msg = e.what();
            INFO("message: " << msg);
            CHECK(msg.find(fragment) != std::string::npos);
        }
    };

    expect_error("[poisson]\nmatrix = [[\"1\"]]\n", "missing [chart]");
    expect_error("[chart]\ndimension = 0\n", "dimension");
    expect_error("[chart]\ndimension = 1\n[checks]\nnames = [\"nope\"]\n", "unknown check");
    expect_error("[chart]\ndimension = 1\n[checks]\nnames = [\"jacobi\"]\n",
                 "needs a [poisson] matrix");
    expect_error("[chart]\ndimension = 1\n[poisson]\nmatrix = [[\"1\", \"2\"]]\n"
                 "[checks]\nnames = [\"jacobi\"]\n",
                 "must have 1 entries");
    expect_error("[chart]\ndimension = 1\n[poisson]\nmatrix = [[\"z9\"]]\n"
                 "[checks]\nnames = [\"jacobi\"]\n",
                 "matrix[1][1]");
    expect_error("[chart]\ndimension = 1\n[poisson]\nmatrix = [[\"1\"]]\n"
                 "[cotangent_metric]\nmatrix = [[\"1\", \"1\"], [\"0\", \"1\"]]\n"
                 "[checks]\nnames = [\"jacobi\"]\n",
                 "[cotangent_metric]");
    expect_error("[chart]\ndimension = 1\ndimension = 2\n", "duplicate key");
    expect_error("[mystery]\nx = 1\n", "unknown section");
    expect_error("[chart]\ndimension = 1\norigin_excluded = [true, false]\n", "one flag per");
    expect_error("[chart]\ndimension = 1\n[poisson]\nmatrix = [[\"1i\"]]\n"
                 "[checks]\nnames = [\"reality\"]\n[numeric]\nsamples = 0\n",
                 "samples");
    expect_error("[chart]\ndimension = 1\n[checks]\nnames = [\"jacobi\", \"jacobi\"]\n",
                 "listed twice");
}

TEST_CASE("structured reports round-trip and are byte-stable") {
    Manifest m = parse_manifest(kMinimal, "mem");
    CheckReport rep = run_checks(m);
    CHECK(rep.overall == Status::pass);
    CHECK(rep.checks.size() == 2);
    CHECK(rep.checks[0].name == "jacobi");  // sorted by name
    CHECK(rep.checks[1].name == "reality");

    std::string a = emit_structured(rep);
    std::string b = emit_structured(run_checks(m));
    CHECK(a == b);

    CheckReport back = parse_structured(a);
    CHECK(back.manifest_path == rep.manifest_path);
    CHECK(back.seed == rep.seed);
    CHECK(back.samples == rep.samples);
    CHECK(back.overall == rep.overall);
    REQUIRE(back.checks.size() == rep.checks.size());
    for (size_t k = 0; k < back.checks.size(); ++k) {
        CHECK(back.checks[k].name == rep.checks[k].name);
        CHECK(back.checks[k].status == rep.checks[k].status);
        CHECK(back.checks[k].notes == rep.checks[k].notes);
        CHECK(back.checks[k].max_residual == rep.checks[k].max_residual);
        CHECK(back.checks[k].max_probe_error == rep.checks[k].max_probe_error);
    }

    CHECK_THROWS(parse_structured("{\"schema_version\": 99}"));
}

TEST_CASE("failing checks drive the overall verdict") {
    const char* text = R"(
[chart]
dimension = 2

[poisson]
matrix = [["1", "0"], ["0", "z1*zb1"]]

[checks]
names = ["jacobi", "j-invariance"]
)";
    Manifest m = parse_manifest(text, "mem");
    CheckReport rep = run_checks(m);
    CHECK(rep.overall == Status::fail);
    CHECK(rep.checks[0].name == "j-invariance");
    CHECK(rep.checks[0].status == Status::pass);
    CHECK(rep.checks[1].name == "jacobi");
    CHECK(rep.checks[1].status == Status::fail);
    CHECK_FALSE(rep.checks[1].witnesses.empty());
    REQUIRE(rep.checks[1].max_residual.has_value());
    CHECK(*rep.checks[1].max_residual > 0.1);
}
