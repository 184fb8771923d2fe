#pragma once

// Subcommands of the `symdisc` executable. Each returns a process exit code.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symdisc/exact/report.hpp"
#include "symdisc/exact/verify.hpp"
#include "symdisc/zerofind.hpp"

namespace symdisc::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2, kNumericalFailure = 3 };

enum class Format { Text, Json, Csv };
Format format_from_string(const std::string& s);

struct RunConfig {
  std::uint64_t seed = 0;
  double tolerance = kDim3Tolerance;
  double lift_tolerance = kLiftTolerance;
  unsigned threads = 1;
  std::optional<std::filesystem::path> output;
  Format format = Format::Text;
};

/// "re,im" -> complex; a bare real number is accepted as well.
Complex parse_complex(const std::string& text);

/// Floating-point cross-checks of the dimension-3 closed form against the direct determinant.
exact::VerificationReport numeric_cross_checks(std::uint64_t seed);

int cmd_verify_paper(const RunConfig& cfg, exact::Fault fault, std::ostream& out);
int cmd_find_zero(std::size_t n, const RunConfig& cfg, double rho, double mu1_modulus, const LiftConfig& lift,
                  std::ostream& out);
int cmd_lift(const std::filesystem::path& input, const RunConfig& cfg, const LiftConfig& lift, std::ostream& out);
int cmd_eval(std::size_t n, const std::vector<std::string>& lambda, const std::vector<std::string>& mu,
             const RunConfig& cfg, std::ostream& out);
int cmd_sample(const std::string& mode, std::size_t count, const RunConfig& cfg, std::ostream& out);
int cmd_grid(const std::filesystem::path& around, const std::string& axis, std::size_t res, double half_width,
             const RunConfig& cfg, std::ostream& out);

/// Full command-line entry point (argument parsing included).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symdisc::cli
