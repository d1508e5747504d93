#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace f1zeta::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kIdentityFailed = 1,
  kParseError = 2,
  kInvalidDescriptor = 3,
  kResourceCap = 4,
  kInvalidNumeric = 5,
};

enum class OutputFormat { Plain, Latex, Json };

struct ZetaArgs {
  std::string scheme;
  /// Comma-separated coefficients, low degree first; replaces `scheme`.
  std::optional<std::string> raw_poly;
  OutputFormat format = OutputFormat::Plain;
};

struct CheckFeArgs {
  std::string scheme;
  OutputFormat format = OutputFormat::Plain;
};

struct CountArgs {
  std::string scheme;
  std::vector<int> primes{2, 3, 5};
  bool oracle = false;
  double max_enumeration = 1e7;
  OutputFormat format = OutputFormat::Plain;
};

struct WeylArgs {
  std::string family;
  int rank = 0;
  std::string method = "both";  // bfs | degrees | both
  std::uint64_t cap = 4'000'000;
  OutputFormat format = OutputFormat::Plain;
};

struct LimitArgs {
  std::string scheme;
  std::optional<std::string> raw_poly;
  std::string s0 = "0";
  int steps = 6;
  OutputFormat format = OutputFormat::Plain;
};

int cmd_zeta(const ZetaArgs& args, std::ostream& out, std::ostream& err);
int cmd_check_fe(const CheckFeArgs& args, std::ostream& out, std::ostream& err);
int cmd_count(const CountArgs& args, std::ostream& out, std::ostream& err);
int cmd_weyl(const WeylArgs& args, std::ostream& out, std::ostream& err);
int cmd_limit(const LimitArgs& args, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] is the program name).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace f1zeta::cli
