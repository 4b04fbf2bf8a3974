#include "bts/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

#include "bts/fast_kronecker.hpp"
#include "bts/recurrences.hpp"
#include "bts/series.hpp"

namespace bts {

std::string to_string(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::tangent_recurrence: return "tangent-recurrence";
    case BenchAlgorithm::secant_recurrence: return "secant-recurrence";
    case BenchAlgorithm::tangent_fast: return "tangent-fast";
    case BenchAlgorithm::secant_fast: return "secant-fast";
    case BenchAlgorithm::atkinson: return "atkinson";
    case BenchAlgorithm::akiyama: return "akiyama-tanigawa";
    case BenchAlgorithm::series: return "series-reciprocal";
  }
  return "unknown";
}

namespace {

std::uint64_t max_bits(const std::vector<BigInt>& v) {
  std::uint64_t m = 0;
  for (const auto& x : v) m = std::max(m, bit_length(x));
  return m;
}

std::uint64_t max_bits(const std::vector<Rational>& v) {
  std::uint64_t m = 0;
  for (const auto& x : v) {
    m = std::max({m, bit_length(x.get_num()), bit_length(x.get_den())});
  }
  return m;
}

struct RunResult {
  std::optional<OpCounters> counters;
  std::uint64_t peak_bits = 0;
};

RunResult run_once(BenchAlgorithm a, std::uint64_t n) {
  switch (a) {
    case BenchAlgorithm::tangent_recurrence: {
      auto r = tangent_numbers(n);
      return {r.counters, max_bits(r.seq.values)};
    }
    case BenchAlgorithm::secant_recurrence: {
      auto r = secant_numbers(n);
      return {r.counters, max_bits(r.seq.values)};
    }
    case BenchAlgorithm::tangent_fast:
      return {std::nullopt, max_bits(fast_tangent_numbers(n).values)};
    case BenchAlgorithm::secant_fast:
      return {std::nullopt, max_bits(fast_secant_numbers(n).values)};
    case BenchAlgorithm::atkinson: {
      auto r = atkinson_tangent_secant(n);
      return {r.counters, std::max(max_bits(r.tangent.values),
                                   max_bits(r.secant.values))};
    }
    case BenchAlgorithm::akiyama: {
      auto r = akiyama_tanigawa_bernoulli(2 * n);
      return {r.counters, max_bits(r.seq.values)};
    }
    case BenchAlgorithm::series:
      return {std::nullopt, max_bits(bernoulli_via_series(2 * n).values)};
  }
  return {};
}

}  // namespace

std::vector<BenchRecord> bench_suite(const std::vector<std::uint64_t>& n_values,
                                     const std::vector<BenchAlgorithm>& algorithms,
                                     int repeats) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> out;
  for (std::uint64_t n : n_values) {
    if (n < 2) throw DomainError("bench_suite: every n must be >= 2");
    for (BenchAlgorithm a : algorithms) {
      BenchRecord rec;
      rec.algorithm = to_string(a);
      rec.n = n;
      double best = -1;
      for (int i = 0; i < std::max(repeats, 1); ++i) {
        const auto start = clock::now();
        RunResult r = run_once(a, n);
        const std::chrono::duration<double> dt = clock::now() - start;
        if (best < 0 || dt.count() < best) best = dt.count();
        rec.counters = r.counters;
        rec.peak_value_bits = r.peak_bits;
      }
      rec.wall_time = best;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::string format_bench_table(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "algorithm" << std::right
      << std::setw(7) << "n" << std::setw(13) << "seconds" << std::setw(13)
      << "additions" << std::setw(13) << "mults" << std::setw(13) << "trips"
      << std::setw(11) << "peak_bits" << '\n';
  for (const auto& r : records) {
    out << std::left << std::setw(20) << r.algorithm << std::right
        << std::setw(7) << r.n << std::setw(13) << std::fixed
        << std::setprecision(6) << r.wall_time;
    if (r.counters) {
      out << std::setw(13) << r.counters->additions << std::setw(13)
          << r.counters->multiplications << std::setw(13)
          << r.counters->loop_trips;
    } else {
      out << std::setw(13) << "-" << std::setw(13) << "-" << std::setw(13)
          << "-";
    }
    out << std::setw(11) << r.peak_value_bits << '\n';
  }
  return out.str();
}

std::string bench_to_json(const std::vector<BenchRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"algorithm", r.algorithm},
                     {"n", r.n},
                     {"wall_time", r.wall_time},
                     {"peak_value_bits", r.peak_value_bits}};
    if (r.counters) {
      j["counters"] = {{"additions", r.counters->additions},
                       {"multiplications", r.counters->multiplications},
                       {"init_multiplications", r.counters->init_multiplications},
                       {"loop_trips", r.counters->loop_trips}};
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::optional<std::uint64_t> fast_crossover(
    const std::vector<BenchRecord>& records) {
  std::map<std::uint64_t, double> rec, fast;
  for (const auto& r : records) {
    if (r.algorithm == to_string(BenchAlgorithm::tangent_recurrence)) {
      rec[r.n] = r.wall_time;
    } else if (r.algorithm == to_string(BenchAlgorithm::tangent_fast)) {
      fast[r.n] = r.wall_time;
    }
  }
  for (const auto& [n, t_rec] : rec) {
    auto it = fast.find(n);
    if (it != fast.end() && it->second < t_rec) return n;
  }
  return std::nullopt;
}

std::string format_crossover(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "crossover (tangent-fast faster than tangent-recurrence): ";
  if (auto n = fast_crossover(records)) {
    out << "first at n = " << *n << '\n';
  } else {
    out << "not reached in the benchmarked range\n";
  }
  return out.str();
}

}  // namespace bts
