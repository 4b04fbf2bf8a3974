#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "bts/bench.hpp"
#include "bts/cli.hpp"
#include "bts/output.hpp"
#include "bts/recurrences.hpp"

using namespace bts;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t c = 0;
  for (char ch : s) c += ch == '\n';
  return c;
}

}  // namespace

TEST_CASE("plain and json round trip") {
  const SequenceOutput t = to_output(tangent_numbers(30).seq);
  CHECK(t.first_index == 1);
  const SequenceOutput s = to_output(secant_numbers(30).seq);
  CHECK(s.first_index == 0);
  const SequenceOutput b = to_output(bernoulli_from_tangent(tangent_numbers(30).seq), 30);
  CHECK(b.values.size() == 61);
  for (const SequenceOutput& seq : {t, s, b}) {
    const SequenceOutput from_plain = parse_plain(format_sequence(seq, Format::plain));
    CHECK(from_plain.first_index == seq.first_index);
    CHECK(from_plain.values == seq.values);
    CHECK(parse_json(format_sequence(seq, Format::json)) == seq);
  }
  CHECK_THROWS_AS(parse_plain("1 1\n3 2\n"), DomainError);
  CHECK_THROWS_AS(parse_plain("1 x\n"), DomainError);
  CHECK_THROWS_AS(parse_json("{\"kind\":"), DomainError);
}

TEST_CASE("golden files") {
  const std::filesystem::path dir = BTS_TEST_DATA_DIR;
  for (const char* n : {"5", "14", "50"}) {
    for (const char* kind : {"tangent", "secant", "bernoulli"}) {
      const std::string expected =
          read_file(dir / (std::string(kind) + "_" + n + ".txt"));
      REQUIRE(!expected.empty());
      for (const char* alg : {"recurrence", "fast", "atkinson"}) {
        INFO(kind << " -n " << n << " -a " << alg);
        const Run r = run({kind, "-n", n, "--algorithm", alg});
        CHECK(r.code == 0);
        CHECK(r.out == expected);
      }
    }
    const std::string bern = read_file(dir / (std::string("bernoulli_") + n + ".txt"));
    CHECK(run({"bernoulli", "-n", n, "-a", "akiyama"}).out == bern);
    CHECK(run({"bernoulli", "-n", n, "-a", "series"}).out == bern);
    CHECK(run({"bernoulli", "-n", n, "-a", "all"}).out == bern);
  }
}

TEST_CASE("bernoulli output has 2n + 1 lines") {
  CHECK(run({"bernoulli", "-n", "0"}).code == 1);
  for (int n : {1, 7, 20}) {
    const Run r = run({"bernoulli", "-n", std::to_string(n)});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == static_cast<std::size_t>(2 * n + 1));
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"tangent"}).code == 1);
  CHECK(run({"tangent", "-n", "abc"}).code == 1);
  CHECK(run({"tangent", "-n", "0"}).code == 1);
  CHECK(run({"tangent", "-n", "5", "-a", "akiyama"}).code == 1);
  CHECK(run({"secant", "-n", "5", "-a", "series"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  const Run v = run({"verify", "-n", "30"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "-n", "10", "--format", "json"}).code == 0);
  CHECK(run({"tangent", "-n", "6", "-a", "all", "-f", "json"}).code == 0);
}

TEST_CASE("--output writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "bts_test_output.txt";
  std::filesystem::remove(path);
  const Run r = run({"secant", "-n", "5", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path) == read_file(std::filesystem::path(BTS_TEST_DATA_DIR) / "secant_5.txt"));
  std::filesystem::remove(path);
}

TEST_CASE("format_report") {
  VerificationReport rep;
  rep.add("one", true);
  rep.add("two", false, "because");
  const std::string plain = format_report(rep, Format::plain);
  CHECK(plain.find("PASS one") != std::string::npos);
  CHECK(plain.find("FAIL two") != std::string::npos);
  CHECK(format_report(rep, Format::json).find("\"all_pass\": false") != std::string::npos);
}

TEST_CASE("bench counters are deterministic") {
  const auto a = bench_suite({5}, {BenchAlgorithm::tangent_recurrence}, 1);
  const auto b = bench_suite({5}, {BenchAlgorithm::tangent_recurrence}, 2);
  REQUIRE(a.size() == 1);
  REQUIRE(a[0].counters.has_value());
  CHECK(a[0].counters == b[0].counters);
  CHECK(a[0].counters->loop_trips == 10);
  CHECK(a[0].algorithm == "tangent-recurrence");
  CHECK_THROWS_AS(bench_suite({1}, {BenchAlgorithm::atkinson}, 1), DomainError);
}

TEST_CASE("atkinson does at least 3x the additions at n = 500") {
  const auto recs = bench_suite(
      {500}, {BenchAlgorithm::tangent_recurrence, BenchAlgorithm::atkinson}, 1);
  REQUIRE(recs.size() == 2);
  const double ratio = static_cast<double>(recs[1].counters->additions) /
                       static_cast<double>(recs[0].counters->additions);
  CHECK(ratio >= 3);
  CHECK(format_bench_table(recs).find("atkinson") != std::string::npos);
  CHECK(bench_to_json(recs).find("\"tangent-recurrence\"") != std::string::npos);
}

TEST_CASE("fast_crossover") {
  auto rec = [](const char* alg, std::uint64_t n, double t) {
    BenchRecord r;
    r.algorithm = alg;
    r.n = n;
    r.wall_time = t;
    return r;
  };
  CHECK_FALSE(fast_crossover({}).has_value());
  std::vector<BenchRecord> never = {rec("tangent-recurrence", 10, 1),
                                    rec("tangent-fast", 10, 2)};
  CHECK_FALSE(fast_crossover(never).has_value());
  std::vector<BenchRecord> later = {
      rec("tangent-recurrence", 10, 1), rec("tangent-fast", 10, 2),
      rec("tangent-recurrence", 20, 4), rec("tangent-fast", 20, 3),
      rec("tangent-recurrence", 40, 9), rec("tangent-fast", 40, 5)};
  CHECK(fast_crossover(later) == std::uint64_t{20});
  CHECK(format_crossover(later).find("20") != std::string::npos);
}

TEST_CASE("bench via the command line") {
  const auto path = std::filesystem::temp_directory_path() / "bts_bench.json";
  std::filesystem::remove(path);
  const Run r = run({"bench", "-n", "10,20", "--repeats", "1", "-o", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("tangent-fast") != std::string::npos);
  CHECK(read_file(path).find("\"n\"") != std::string::npos);
  std::filesystem::remove(path);
}
