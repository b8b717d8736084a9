#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "catfam/errors.hpp"
#include "catfam/sequence.hpp"
#include "catfam/transforms.hpp"

namespace catfam {

// Brute-force jobs refuse generations above this unless told otherwise;
// 11! is already ~39.9M sequences.
inline constexpr int kDefaultGenerationCap = 10;

// Full record of repeated application of one endomorphism: the distinct
// sequences visited from the start, and the terminal cycle.
struct OrbitTrace {
  Sequence start;
  std::uint64_t steps_to_cycle = 0;
  std::uint64_t period = 1;
  // The cycle, rotated to begin at its lexicographically smallest element
  // so traces compare well.
  std::vector<Sequence> cycle;
  // Everything seen from start up to the step before the first revisit;
  // size is steps_to_cycle + period.
  std::vector<Sequence> visited;
};

// Iterates e from s until some sequence repeats. Throws BudgetExceeded when
// no repeat shows up within max_steps applications (every orbit is finite,
// so this only signals a budget chosen below the stabilization bound).
OrbitTrace orbit(const Sequence& s, Endomorphism e, std::uint64_t max_steps);

// Step budget that the stabilization bounds make sufficient for any
// generation-n start: n(n+1)/2 + 1 for delta, n(n+1) + 1 for gamma and mu.
std::uint64_t default_max_steps(Endomorphism e, int generation);

OrbitTrace orbit(const Sequence& s, Endomorphism e);

struct Stabilization {
  Sequence terminal;
  std::uint64_t steps = 0;
};

// Iterates delta until fixed. For a generation-n start this takes at most
// n(n+1)/2 steps.
Stabilization stabilize_delta(const Sequence& s);

// Iterates gamma until reaching a point of period dividing 2; at most
// n(n+1) steps.
Stabilization find_double_point_gamma(const Sequence& s);

bool is_fixed(const Sequence& s, Endomorphism e);

struct CensusOptions {
  int workers = 0;  // 0 = hardware concurrency
  int generation_cap = kDefaultGenerationCap;
};

// Counts generation-n sequences satisfying pred by walking odometer
// sub-ranges on `workers` threads and summing the per-range counts; the
// result never depends on the worker count.
template <typename Pred>
std::uint64_t parallel_census(int generation, int workers, Pred pred) {
  const std::uint64_t total = generation_size(generation);
  unsigned hw = std::thread::hardware_concurrency();
  if (workers <= 0) workers = hw > 0 ? static_cast<int>(hw) : 1;
  if (static_cast<std::uint64_t>(workers) > total) {
    workers = static_cast<int>(total);
  }

  if (workers <= 1) {
    std::uint64_t count = 0;
    for (const Sequence& s : GenerationRange(generation)) {
      if (pred(s)) ++count;
    }
    return count;
  }

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(workers), 0);
  {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
    const std::uint64_t extra = total % static_cast<std::uint64_t>(workers);
    std::uint64_t lo = 0;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t hi =
          lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
      threads.emplace_back([&, w, lo, hi] {
        std::uint64_t c = 0;
        for (const Sequence& s : GenerationRange(generation, lo, hi)) {
          if (pred(s)) ++c;
        }
        counts[static_cast<std::size_t>(w)] = c;
      });
      lo = hi;
    }
  }

  std::uint64_t count = 0;
  for (std::uint64_t c : counts) count += c;
  return count;
}

// Brute-force count of delta-fixed (self-describing) generation-n
// sequences. Equals catalan(n+1).
std::uint64_t count_fixed_points_delta(int generation, const CensusOptions& opts = {});

// Brute-force count of generation-n sequences with gamma(gamma(s)) == s.
// No closed form is known; the first values are 1, 2, 4, 10, 26, 70, 216.
std::uint64_t count_double_points_gamma(int generation, const CensusOptions& opts = {});

}  // namespace catfam
