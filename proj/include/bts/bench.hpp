// Timing and operation-count harness comparing the engines.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bts/sequences.hpp"

namespace bts {

/// Engine families a benchmark can run. Each produces the first n numbers
/// of its kind: T_1..T_n, S_0..S_n, or B_0..B_2n for the Bernoulli-only
/// engines.
enum class BenchAlgorithm {
  tangent_recurrence,
  secant_recurrence,
  tangent_fast,
  secant_fast,
  atkinson,
  akiyama,
  series,
};

std::string to_string(BenchAlgorithm a);

struct BenchRecord {
  std::string algorithm;
  std::uint64_t n = 0;
  double wall_time = 0;  // seconds, best of the repeats
  std::optional<OpCounters> counters;  // absent for the fixed-point engines
  std::uint64_t peak_value_bits = 0;
};

/// Runs every algorithm at every n, sequentially, keeping the best wall time
/// of `repeats` runs. Requires each n >= 2.
std::vector<BenchRecord> bench_suite(const std::vector<std::uint64_t>& n_values,
                                     const std::vector<BenchAlgorithm>& algorithms,
                                     int repeats = 3);

std::string format_bench_table(const std::vector<BenchRecord>& records);
std::string bench_to_json(const std::vector<BenchRecord>& records);

/// Smallest benchmarked n where the fixed-point tangent engine beat the
/// recurrence, or nullopt when it never did.
std::optional<std::uint64_t> fast_crossover(
    const std::vector<BenchRecord>& records);

std::string format_crossover(const std::vector<BenchRecord>& records);

}  // namespace bts
