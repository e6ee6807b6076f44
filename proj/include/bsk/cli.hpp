#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "bsk/point.hpp"
#include "bsk/quadrature.hpp"

namespace bsk {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitToleranceFailure = 1,
    kExitUsageError = 2,
    kExitNumericalFailure = 3,
};

struct RunConfig {
    std::string command;
    Domain domain = Domain::Disc;
    std::string poly_spec = "1";
    std::vector<std::string> z_specs;
    Resolution resolution{0, 0};  // {0,0} -> per-domain default
    double tolerance = 1e-8;
    std::string output_path;  // empty -> stdout
    int threads = 1;
    int kmax = 4;
    int mmax = 4;
    int samples = 10;
    int levels = 6;
    std::string case_id;
};

Resolution default_resolution(Domain d);

/// 17 significant digits; the CSV float format.
std::string fmt17(double v);
/// "a+bi" with both parts in fmt17.
std::string fmt_complex(std::complex<double> v);

/// Commands write CSV (or a plain report for measure-audit) to `out` and
/// return an exit code; they throw on usage and numerical errors.
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_residual_table(const RunConfig& cfg, std::ostream& out);
int cmd_ratio(const RunConfig& cfg, std::ostream& out);
int cmd_convergence(const RunConfig& cfg, std::ostream& out);
int cmd_measure_audit(const RunConfig& cfg, std::ostream& out);

/// Dispatch cfg.command with exceptions mapped to the exit-code contract.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parse argv (and an optional JSON config file), run the
/// command, and write the report to --out or stdout.
int run_cli(int argc, const char* const* argv);

}  // namespace bsk
