// Command-line front end.
//
//   bts tangent   -n N [--algorithm recurrence|fast|atkinson|all]
//   bts secant    -n N [--algorithm recurrence|fast|atkinson|all]
//   bts bernoulli -n N [--algorithm recurrence|fast|atkinson|akiyama|series|all]
//   bts verify    -n N [--precision BITS]
//   bts bench     -n N[,N...] [--algorithm ...] [--repeats R]
//
// Common options: --format plain|json, --output PATH.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bts {

enum class ExitCode : int {
  ok = 0,
  usage = 1,
  verification_failed = 2,
  integrity_error = 3,
};

enum class Command { tangent, secant, bernoulli, verify, bench };
enum class Algorithm { recurrence, fast, atkinson, akiyama, series, all };

struct RunConfig {
  Command command = Command::tangent;
  std::vector<unsigned long> n;  // one value except for bench
  Algorithm algorithm = Algorithm::recurrence;
  bool json = false;
  std::optional<std::string> output_path;
  long precision = 53;
  int repeats = 3;
};

/// Runs one command. `args` excludes the program name. Output goes to
/// `out` unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bts
