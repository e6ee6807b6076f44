#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "bsk/cli.hpp"

using namespace bsk;

namespace {

struct CommandResult {
    int exit_code;
    std::string out;
    std::string err;
};

CommandResult run(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run_command(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

int run_argv(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"bsk"};
    argv.insert(argv.end(), args);
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("fmt17 prints 17 significant digits") {
    CHECK(fmt17(0.1) == "0.10000000000000001");
    CHECK(fmt17(0.5) == "0.5");
    CHECK(fmt_complex({0.3, 0.0}) == "0.29999999999999999+0i");
    CHECK(fmt_complex({0.0, -0.25}) == "0-0.25i");
}

TEST_CASE("verify: holomorphic monomial on the disc passes") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.poly_spec = "z^2";
    cfg.z_specs = {"0.3+0i"};
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "domain,f,z,szego,bergman,residual,stokes_defect,pass");
    const auto fields = fields_of(lines[1]);
    REQUIRE(fields.size() == 8);
    CHECK(fields[0] == "disc");
    CHECK(fields[1] == "z^2");
    CHECK(std::stod(fields[6]) <= 1e-8);  // stokes defect
    CHECK(fields[7] == "1");
    // residual is numerically zero
    CHECK(std::abs(std::stod(fields[5])) < 1e-9);
}

TEST_CASE("verify: zeta conj(zeta) reports residual 1/2 and still passes the identity") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.poly_spec = "z^1 zb^1";
    cfg.z_specs = {"0.3+0i", "0.1-0.4i"};
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    for (std::size_t i = 1; i < lines_of(r.out).size(); ++i) {
        const auto fields = fields_of(lines_of(r.out)[i]);
        CHECK(std::stod(fields[5]) == doctest::Approx(0.5).epsilon(1e-8));
        CHECK(fields[7] == "1");
    }
}

TEST_CASE("verify: ball six-term defect fails the default tolerance, values still reported") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.domain = Domain::Ball2;
    cfg.poly_spec = "z1^1";
    cfg.z_specs = {"(0.2+0i,0.1i)"};
    cfg.resolution = Resolution{24, 8};
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitToleranceFailure);
    const auto fields = fields_of(lines_of(r.out)[1]);
    CHECK(fields[0] == "ball2");
    // szego and bergman both reproduce z1 = 0.2
    CHECK(std::stod(fields[3]) == doctest::Approx(0.2).epsilon(1e-3));
    CHECK(std::stod(fields[4]) == doctest::Approx(0.2).epsilon(1e-3));
    CHECK(fields[7] == "0");
    // with a loose tolerance the same run exits 0
    cfg.tolerance = 1.0;
    CHECK(run(cfg).exit_code == kExitOk);
}

TEST_CASE("verify: usage errors exit 2, including the z-radius invariant") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.poly_spec = "z^2 +";
    cfg.z_specs = {"0.3+0i"};
    CHECK(run(cfg).exit_code == kExitUsageError);  // parse error
    cfg.poly_spec = "z^2";
    cfg.z_specs = {"0.96+0i"};
    CHECK(run(cfg).exit_code == kExitUsageError);
    cfg.z_specs.clear();
    CHECK(run(cfg).exit_code == kExitUsageError);
    cfg.z_specs = {"0.3+0i"};
    cfg.tolerance = -1.0;
    CHECK(run(cfg).exit_code == kExitUsageError);
}

TEST_CASE("verify output is byte-identical across thread counts") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.poly_spec = "z^2 zb^1 + 1/3 * z^1";
    cfg.z_specs = {"0.25+0.15i", "-0.4+0.2i"};
    cfg.threads = 1;
    const CommandResult one = run(cfg);
    cfg.threads = 4;
    const CommandResult four = run(cfg);
    CHECK(one.exit_code == four.exit_code);
    CHECK(one.out == four.out);
}

TEST_CASE("residual-table: disc CSV rows") {
    RunConfig cfg;
    cfg.command = "residual-table";
    cfg.kmax = 3;
    cfg.mmax = 2;
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "domain,k,m,residual,parity_claim");
    REQUIRE(lines.size() == 1 + 4 * 3);
    auto row = [&](int k, int m) -> std::vector<std::string> {
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto f = fields_of(lines[i]);
            if (f[1] == std::to_string(k) && f[2] == std::to_string(m)) return f;
        }
        FAIL("row not found");
        return {};
    };
    CHECK(row(3, 0)[3] == "0");
    CHECK(row(3, 0)[4] == "ok");
    CHECK(row(1, 1)[3] == "1/2");
    CHECK(row(1, 1)[4] == "DEVIATION");
    CHECK(row(2, 1)[3] == "1/3 * z^1");
    CHECK(row(1, 2)[3] == "0");

    cfg.kmax = 9;
    CHECK(run(cfg).exit_code == kExitUsageError);
}

TEST_CASE("residual-table: ball CSV schema") {
    RunConfig cfg;
    cfg.command = "residual-table";
    cfg.domain = Domain::Ball2;
    cfg.kmax = 1;
    cfg.mmax = 1;
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "domain,a1,a2,b1,b2,residual,parity_claim");
    bool found = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        if (f[1] == "1" && f[2] == "0" && f[3] == "1" && f[4] == "0") {
            CHECK(f[5] == "1/6");
            CHECK(f[6] == "DEVIATION");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("ratio: radial samples of S/K against the boundary distance") {
    RunConfig cfg;
    cfg.command = "ratio";
    cfg.samples = 10;
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "domain,abs_z,delta,ratio,ratio_over_delta");
    REQUIRE(lines.size() == 11);
    const auto first = fields_of(lines[1]);
    CHECK(std::stod(first[3]) == doctest::Approx(0.5).epsilon(1e-14));
    const auto last = fields_of(lines[10]);
    CHECK(std::stod(last[1]) == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(std::stod(last[3]) == doctest::Approx(0.095).epsilon(1e-12));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const double q = std::stod(fields_of(lines[i])[4]);
        CHECK(q > 0.0);
        CHECK(q <= 1.0);
    }

    cfg.domain = Domain::Ball2;
    const auto ball_first = fields_of(lines_of(run(cfg).out)[1]);
    CHECK(std::stod(ball_first[3]) == doctest::Approx(0.25).epsilon(1e-14));

    cfg.samples = 1;
    CHECK(run(cfg).exit_code == kExitUsageError);
}

TEST_CASE("convergence: documented cases") {
    RunConfig cfg;
    cfg.command = "convergence";
    cfg.case_id = "disc-reproduce-z3";
    cfg.levels = 6;
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "case,ntheta,nradial,error");
    REQUIRE(lines.size() == 7);
    const auto last = fields_of(lines[6]);
    CHECK(last[1] == "256");
    CHECK(std::stod(last[3]) <= 1e-10);
    // errors decrease monotonically once above the roundoff floor
    double prev = 1e300;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const double e = std::stod(fields_of(lines[i])[3]);
        if (prev > 1e-13) CHECK(e < prev);
        prev = e;
    }

    cfg.case_id = "disc-moment-2-2";
    cfg.levels = 4;
    const auto moment_lines = lines_of(run(cfg).out);
    for (std::size_t i = 2; i < moment_lines.size(); ++i)
        CHECK(std::stod(fields_of(moment_lines[i])[3]) <= 1e-12);

    cfg.case_id = "ball-mass";
    cfg.levels = 3;
    const auto mass_lines = lines_of(run(cfg).out);
    for (std::size_t i = 1; i < mass_lines.size(); ++i)
        CHECK(std::stod(fields_of(mass_lines[i])[3]) <= 1e-11);

    cfg.case_id = "no-such-case";
    CHECK(run(cfg).exit_code == kExitUsageError);
    cfg.case_id = "";
    CHECK(run(cfg).exit_code == kExitUsageError);
}

TEST_CASE("measure-audit: the printed form is -1/4 of the geometric measure") {
    RunConfig cfg;
    cfg.command = "measure-audit";
    cfg.resolution = Resolution{24, 10};
    const CommandResult r = run(cfg);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("integrand: 1") != std::string::npos);
    CHECK(r.out.find("ratio: -0.250000+0.000000i") != std::string::npos);

    cfg.poly_spec = "z1^1 zb1^1";
    CHECK(run(cfg).out.find("ratio: -0.250000") != std::string::npos);

    // integrand with zero geometric mass
    cfg.poly_spec = "z1^1";
    CHECK(run(cfg).out.find("ratio: n/a") != std::string::npos);
}

TEST_CASE("full argv entry point writes --out and honors exit codes") {
    const std::string path = "cli_test_out.csv";
    CHECK(run_argv({"verify", "--domain", "disc", "--f", "z^1", "--z", "0.2+0i", "--ntheta", "64",
                    "--nradial", "16", "--out", path.c_str()}) == kExitOk);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "domain,f,z,szego,bergman,residual,stokes_defect,pass");
    in.close();
    std::remove(path.c_str());

    CHECK(run_argv({"verify", "--domain", "nowhere", "--f", "1", "--z", "0+0i"}) == kExitUsageError);
    CHECK(run_argv({"no-such-command"}) == kExitUsageError);
    CHECK(run_argv({"verify", "--f", "z^", "--z", "0+0i"}) == kExitUsageError);
}

TEST_CASE("json config supplies defaults, flags override") {
    const std::string path = "cli_test_config.json";
    {
        std::ofstream cfg(path);
        cfg << R"({"domain":"disc","f":"z^1 zb^1","z":["0.3+0i"],"ntheta":64,"nradial":16})";
    }
    const std::string out_path = "cli_test_config_out.csv";
    CHECK(run_argv({"verify", "--config", path.c_str(), "--out", out_path.c_str()}) == kExitOk);
    {
        std::ifstream in(out_path);
        REQUIRE(in.good());
        std::string header, row;
        std::getline(in, header);
        std::getline(in, row);
        CHECK(fields_of(row)[1] == "z^1 zb^1");
        // residual 1/2 from the config's f
        CHECK(std::stod(fields_of(row)[5]) == doctest::Approx(0.5).epsilon(1e-6));
    }
    // flag overrides the config's f
    CHECK(run_argv({"verify", "--config", path.c_str(), "--f", "z^1", "--out", out_path.c_str()}) ==
          kExitOk);
    {
        std::ifstream in(out_path);
        std::string header, row;
        std::getline(in, header);
        std::getline(in, row);
        CHECK(fields_of(row)[1] == "z^1");
    }
    std::remove(path.c_str());
    std::remove(out_path.c_str());
}
