#include "bts/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "bts/bench.hpp"
#include "bts/fast_kronecker.hpp"
#include "bts/output.hpp"
#include "bts/recurrences.hpp"
#include "bts/series.hpp"
#include "bts/verification.hpp"

namespace bts {

namespace {

const std::map<std::string, Algorithm> kAlgorithms{
    {"recurrence", Algorithm::recurrence}, {"fast", Algorithm::fast},
    {"atkinson", Algorithm::atkinson},     {"akiyama", Algorithm::akiyama},
    {"series", Algorithm::series},         {"all", Algorithm::all},
};

std::string algorithm_name(Algorithm a) {
  for (const auto& [name, value] : kAlgorithms) {
    if (value == a) return name;
  }
  return "?";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when --algorithm all finds engines that disagree.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_algorithm(const RunConfig& cfg) {
  const Algorithm a = cfg.algorithm;
  const bool bernoulli_only = a == Algorithm::akiyama || a == Algorithm::series;
  if ((cfg.command == Command::tangent || cfg.command == Command::secant) &&
      bernoulli_only) {
    throw UsageError("algorithm '" + algorithm_name(a) +
                     "' only produces Bernoulli numbers");
  }
  for (unsigned long n : cfg.n) {
    if (n < 1) throw UsageError("n must be >= 1");
    if (cfg.command == Command::bench && n < 2) {
      throw UsageError("bench needs n >= 2");
    }
  }
  if (cfg.precision < 24) throw UsageError("precision must be >= 24 bits");
}

template <typename Seq>
Seq agree(const std::vector<std::pair<std::string, Seq>>& results) {
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (!(results[i].second == results[0].second)) {
      throw MismatchError("engines disagree: " + results[0].first + " vs " +
                          results[i].first);
    }
  }
  return results.front().second;
}

TangentSeq compute_tangent(std::uint64_t n, Algorithm a) {
  switch (a) {
    case Algorithm::recurrence: return tangent_numbers(n).seq;
    case Algorithm::fast: return fast_tangent_numbers(n);
    case Algorithm::atkinson: return atkinson_tangent_secant(n).tangent;
    default: break;
  }
  return agree<TangentSeq>({{"recurrence", tangent_numbers(n).seq},
                            {"fast", fast_tangent_numbers(n)},
                            {"atkinson", atkinson_tangent_secant(n).tangent}});
}

SecantSeq compute_secant(std::uint64_t n, Algorithm a) {
  switch (a) {
    case Algorithm::recurrence: return secant_numbers(n).seq;
    case Algorithm::fast: return fast_secant_numbers(n);
    case Algorithm::atkinson: return atkinson_tangent_secant(n).secant;
    default: break;
  }
  return agree<SecantSeq>({{"recurrence", secant_numbers(n).seq},
                           {"fast", fast_secant_numbers(n)},
                           {"atkinson", atkinson_tangent_secant(n).secant}});
}

BernoulliSeq compute_bernoulli(std::uint64_t n, Algorithm a) {
  switch (a) {
    case Algorithm::recurrence:
    case Algorithm::fast:
    case Algorithm::atkinson:
      return bernoulli_from_tangent(compute_tangent(n, a));
    case Algorithm::akiyama: return akiyama_tanigawa_bernoulli(2 * n).seq;
    case Algorithm::series: return bernoulli_via_series(2 * n);
    case Algorithm::all: break;
  }
  return agree<BernoulliSeq>(
      {{"recurrence", bernoulli_from_tangent(tangent_numbers(n).seq)},
       {"fast", bernoulli_from_tangent(fast_tangent_numbers(n))},
       {"atkinson", bernoulli_from_tangent(atkinson_tangent_secant(n).tangent)},
       {"akiyama", akiyama_tanigawa_bernoulli(2 * n).seq},
       {"series", bernoulli_via_series(2 * n)}});
}

std::vector<BenchAlgorithm> bench_algorithms(Algorithm a) {
  switch (a) {
    case Algorithm::recurrence:
      return {BenchAlgorithm::tangent_recurrence,
              BenchAlgorithm::secant_recurrence};
    case Algorithm::fast:
      return {BenchAlgorithm::tangent_fast, BenchAlgorithm::secant_fast};
    case Algorithm::atkinson: return {BenchAlgorithm::atkinson};
    case Algorithm::akiyama: return {BenchAlgorithm::akiyama};
    case Algorithm::series: return {BenchAlgorithm::series};
    case Algorithm::all: break;
  }
  return {BenchAlgorithm::tangent_recurrence, BenchAlgorithm::secant_recurrence,
          BenchAlgorithm::tangent_fast, BenchAlgorithm::secant_fast,
          BenchAlgorithm::atkinson};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + *cfg.output_path);
  file << text;
  if (!file) throw UsageError("failed writing " + *cfg.output_path);
}

int execute(const RunConfig& cfg, std::ostream& out) {
  const Format format = cfg.json ? Format::json : Format::plain;
  const std::uint64_t n = cfg.n.front();
  switch (cfg.command) {
    case Command::tangent:
      emit(cfg, format_sequence(to_output(compute_tangent(n, cfg.algorithm)), format),
           out);
      return 0;
    case Command::secant:
      emit(cfg, format_sequence(to_output(compute_secant(n, cfg.algorithm)), format),
           out);
      return 0;
    case Command::bernoulli:
      emit(cfg,
           format_sequence(to_output(compute_bernoulli(n, cfg.algorithm), n),
                           format),
           out);
      return 0;
    case Command::verify: {
      const VerificationReport report = verify_all(n, cfg.precision);
      emit(cfg, format_report(report, format), out);
      return report.all_pass() ? 0 : static_cast<int>(ExitCode::verification_failed);
    }
    case Command::bench: {
      const auto records = bench_suite(
          std::vector<std::uint64_t>(cfg.n.begin(), cfg.n.end()),
          bench_algorithms(cfg.algorithm), cfg.repeats);
      std::string table = format_bench_table(records);
      if (cfg.algorithm == Algorithm::all) table += format_crossover(records);
      if (cfg.output_path) {
        // Records are persisted as JSON; the table still goes to the terminal.
        emit(cfg, bench_to_json(records), out);
        out << table;
      } else {
        out << (cfg.json ? bench_to_json(records) : table);
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Bernoulli, Tangent and Secant numbers by several exact algorithms",
               "bts"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "plain";
  std::string output;

  auto add_common = [&](CLI::App* sub, bool with_algorithm, bool multi_n) {
    if (multi_n) {
      sub->add_option("-n", cfg.n, "Counts to benchmark")
          ->delimiter(',')
          ->default_str("100,200,500,1000");
    } else {
      sub->add_option("-n", cfg.n, "How many numbers to compute")
          ->required()
          ->expected(1);
    }
    if (with_algorithm) {
      sub->add_option("--algorithm,-a", cfg.algorithm, "Engine to use")
          ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
    }
    sub->add_option("--format,-f", format, "Output format")
        ->check(CLI::IsMember({"plain", "json"}));
    sub->add_option("--output,-o", output, "Write to this file instead of stdout");
  };

  auto* tangent = app.add_subcommand("tangent", "Tangent numbers T_1..T_n");
  add_common(tangent, true, false);
  auto* secant = app.add_subcommand("secant", "Secant numbers S_0..S_n");
  add_common(secant, true, false);
  auto* bernoulli =
      app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_2n");
  add_common(bernoulli, true, false);
  auto* verify = app.add_subcommand("verify", "Cross-check all engines up to n");
  add_common(verify, false, false);
  verify->add_option("--precision", cfg.precision,
                     "Significand bits for the floating-point recurrences");
  auto* bench = app.add_subcommand("bench", "Time the engines");
  add_common(bench, true, true);
  bench->add_option("--repeats", cfg.repeats, "Runs per measurement (best kept)")
      ->check(CLI::PositiveNumber);

  // CLI11 takes the vector in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::usage);
  }

  if (tangent->parsed()) cfg.command = Command::tangent;
  if (secant->parsed()) cfg.command = Command::secant;
  if (bernoulli->parsed()) cfg.command = Command::bernoulli;
  if (verify->parsed()) cfg.command = Command::verify;
  if (bench->parsed()) {
    cfg.command = Command::bench;
    if (cfg.n.empty()) cfg.n = {100, 200, 500, 1000};
    if (bench->count("--algorithm") == 0) cfg.algorithm = Algorithm::all;
  }
  cfg.json = format == "json";
  if (!output.empty()) cfg.output_path = output;

  try {
    check_algorithm(cfg);
    return execute(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return static_cast<int>(ExitCode::usage);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const MismatchError& e) {
    err << "verification failure: " << e.what() << '\n';
    return static_cast<int>(ExitCode::verification_failed);
  } catch (const std::exception& e) {
    err << "internal integrity error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::integrity_error);
  }
}

}  // namespace bts
