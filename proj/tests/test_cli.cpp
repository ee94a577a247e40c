#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "extragrad/cli.hpp"
#include "extragrad/config_io.hpp"
#include "extragrad/diagnostics.hpp"
#include "fixtures.hpp"

using namespace extragrad;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "extragrad_cli_test") {
        fs::create_directories(path);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_config(const TempDir& dir, const std::string& name, const ProblemConfig& cfg) {
    const std::string p = dir.file(name);
    std::ofstream out(p);
    out << serialize_config(cfg);
    return p;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CompareRow {
    std::string scheme;
    std::string iterations;
    std::string reason;
};

std::vector<CompareRow> parse_compare_csv(const std::string& text) {
    std::vector<CompareRow> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        f.push_back(cur);
        REQUIRE(f.size() == 5);
        rows.push_back({f[0], f[1], f[4]});
    }
    return rows;
}

}  // namespace

TEST_CASE("cmd_run writes a monotone trace and exits zero on convergence") {
    TempDir dir;
    auto p = fixtures::make_suite()[0];
    p.config.stop.residual_threshold = 1e-8;
    const auto cfg_path = write_config(dir, "p1.cfg", p.config);
    const auto out_path = dir.file("p1.csv");

    std::ostringstream out, err;
    const int rc = cmd_run(cfg_path, out_path, std::nullopt, out, err);
    CHECK(rc == kExitOk);
    CHECK(out.str().find("terminal_reason=residual") != std::string::npos);

    std::ifstream csv(out_path);
    const auto rows = parse_trace_csv(csv);
    REQUIRE(rows.size() >= 2);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].dist_known.has_value());
        // Fejer: distances to the known solution never increase
        CHECK(*rows[i].dist_known <= *rows[i - 1].dist_known + 1e-12);
    }
}

TEST_CASE("cmd_run determinism: identical bytes across repeated invocations") {
    TempDir dir;
    const auto p = fixtures::make_suite()[1];
    const auto cfg_path = write_config(dir, "p2.cfg", p.config);
    std::ostringstream out, err;
    CHECK(cmd_run(cfg_path, dir.file("a.csv"), std::nullopt, out, err) == kExitOk);
    CHECK(cmd_run(cfg_path, dir.file("b.csv"), std::nullopt, out, err) == kExitOk);
    CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));
}

TEST_CASE("cmd_run exit codes for the failure modes") {
    TempDir dir;
    std::ostringstream out, err;

    // missing config file -> IO failure
    CHECK(cmd_run(dir.file("nope.cfg"), dir.file("x.csv"), std::nullopt, out, err) == kExitIo);

    // bad schedule -> validation, and no CSV is produced
    auto bad = fixtures::make_suite()[0];
    bad.config.lambda = Schedule::constant(1.0, 0.5, 3.0);
    const auto bad_path = [&] {
        const std::string p = dir.file("bad.cfg");
        std::ofstream o(p);
        o << serialize_config(bad.config);
        return p;
    }();
    const auto bad_out = dir.file("must_not_exist.csv");
    CHECK(cmd_run(bad_path, bad_out, std::nullopt, out, err) == kExitValidation);
    CHECK_FALSE(fs::exists(bad_out));
    CHECK(err.str().find("lambda.high >= 2*alpha") != std::string::npos);

    // iteration cap -> non-convergence with a two-row trace
    auto capped = fixtures::make_suite()[0];
    capped.config.stop.max_iterations = 1;
    const auto capped_path = write_config(dir, "capped.cfg", capped.config);
    const auto capped_out = dir.file("capped.csv");
    std::ostringstream out2;
    CHECK(cmd_run(capped_path, capped_out, std::nullopt, out2, err) == kExitNoConvergence);
    CHECK(out2.str().find("terminal_reason=max_iterations") != std::string::npos);
    std::ifstream csv(capped_out);
    CHECK(parse_trace_csv(csv).size() == 2);

    // starting at the known solution -> immediate success
    auto at_solution = fixtures::make_suite()[0];
    at_solution.config.x0 = at_solution.z;
    const auto sol_path = write_config(dir, "at_solution.cfg", at_solution.config);
    std::ostringstream out3;
    CHECK(cmd_run(sol_path, dir.file("sol.csv"), std::nullopt, out3, err) == kExitOk);
    std::ifstream csv2(dir.file("sol.csv"));
    CHECK(parse_trace_csv(csv2).size() == 1);
}

TEST_CASE("cmd_compare ranks picard-mann first on the contraction benchmark") {
    TempDir dir;
    const auto cfg_path = write_config(dir, "speed.cfg", fixtures::make_speed_config());
    const auto out_path = dir.file("speed.csv");
    std::ostringstream out, err;
    const int rc = cmd_compare(cfg_path, {"picard_mann", "mann", "ishikawa"}, out_path,
                               std::nullopt, out, err);
    CHECK(rc == kExitOk);
    const auto rows = parse_compare_csv(slurp(out_path));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].scheme == "picard_mann");
    const long pm = std::stol(rows[0].iterations);
    const long mann = std::stol(rows[1].iterations);
    const long ish = std::stol(rows[2].iterations);
    CHECK(pm < mann);
    CHECK(pm < ish);
    for (const auto& r : rows) CHECK(r.reason == "residual");
}

TEST_CASE("cmd_compare runs ko and tt side by side") {
    TempDir dir;
    auto p = fixtures::make_suite()[0];
    p.config.stop.residual_threshold = 1e-8;
    const auto cfg_path = write_config(dir, "p1.cfg", p.config);
    const auto out_path = dir.file("cmp.csv");
    std::ostringstream out, err;
    CHECK(cmd_compare(cfg_path, {"ko", "tt"}, out_path, std::nullopt, out, err) == kExitOk);
    const auto rows = parse_compare_csv(slurp(out_path));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].reason == "residual");
    CHECK(rows[1].reason == "residual");
}

TEST_CASE("cmd_compare failure modes") {
    TempDir dir;
    const auto cfg_path = write_config(dir, "speed.cfg", fixtures::make_speed_config());
    std::ostringstream out, err;
    CHECK(cmd_compare(cfg_path, {}, dir.file("c1.csv"), std::nullopt, out, err) ==
          kExitValidation);
    CHECK(err.str().find("no schemes") != std::string::npos);

    // an invalid scheme is listed while the valid one still runs
    std::ostringstream out2, err2;
    const int rc = cmd_compare(cfg_path, {"picard_mann", "resolvent_ko"}, dir.file("c2.csv"),
                               std::nullopt, out2, err2);
    CHECK(rc == kExitValidation);
    const auto rows = parse_compare_csv(slurp(dir.file("c2.csv")));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].reason == "residual");
    CHECK(rows[1].reason == "invalid_config");
    CHECK(err2.str().find("missing operator_B") != std::string::npos);
}

TEST_CASE("cmd_audit verdicts") {
    TempDir dir;
    std::ostringstream out, err;

    const auto good_path = write_config(dir, "good.cfg", fixtures::make_suite()[0].config);
    CHECK(cmd_audit(good_path, std::nullopt, 5000, out, err) == kExitOk);

    // inflated inverse-strong-monotonicity claim
    auto inflated = fixtures::make_suite()[4];
    inflated.config.operator_A =
        IsmOperator::affine_gradient(Matrix::diag({1.0, 2.0}), Vector{-2.0, -1.0}, 0.9);
    inflated.config.lambda = Schedule::constant(0.45);  // still inside (0, 2*0.9)
    const auto inflated_path = write_config(dir, "inflated.cfg", inflated.config);
    std::ostringstream out2;
    CHECK(cmd_audit(inflated_path, std::nullopt, 5000, out2, err) == kExitValidation);
    CHECK(out2.str().find("FAIL") != std::string::npos);

    // monotone but not ism
    ProblemConfig rot;
    rot.dimension = 2;
    rot.set = ConvexSet::whole_space(2);
    rot.operator_A = IsmOperator::rotation90(0.5);
    rot.map_T = Nonexpansive::identity();
    rot.scheme = SchemeKind::ko;
    rot.lambda = Schedule::constant(0.3);
    rot.alpha_n = Schedule::constant(0.5);
    rot.x0 = {0.0, 0.0};
    const auto rot_path = write_config(dir, "rot.cfg", rot);
    std::ostringstream out3;
    CHECK(cmd_audit(rot_path, std::nullopt, 5000, out3, err) == kExitValidation);
    CHECK(out3.str().find("ism inequality") != std::string::npos);
    CHECK(out3.str().find("monotone: pass") != std::string::npos);
}

TEST_CASE("cmd_oracle prints a passing certificate for a solvable problem") {
    TempDir dir;
    const auto cfg_path = write_config(dir, "p1.cfg", fixtures::make_suite()[0].config);
    std::ostringstream out, err;
    CHECK(cmd_oracle(cfg_path, std::nullopt, 20000, out, err) == kExitOk);
    CHECK(out.str().find("passed=true") != std::string::npos);

    // no set/operator -> validation error
    const auto speed_path = write_config(dir, "speed.cfg", fixtures::make_speed_config());
    std::ostringstream out2, err2;
    CHECK(cmd_oracle(speed_path, std::nullopt, 1000, out2, err2) == kExitValidation);
}

TEST_CASE("seed override changes the config seed but not the trajectory") {
    TempDir dir;
    const auto p = fixtures::make_suite()[0];
    const auto cfg_path = write_config(dir, "p1.cfg", p.config);
    std::ostringstream out, err;
    CHECK(cmd_run(cfg_path, dir.file("s1.csv"), std::uint64_t{12345}, out, err) == kExitOk);
    CHECK(cmd_run(cfg_path, dir.file("s2.csv"), std::nullopt, out, err) == kExitOk);
    // deterministic iterations do not consume randomness
    CHECK(slurp(dir.file("s1.csv")) == slurp(dir.file("s2.csv")));
}
