#include "catfam/dynamics.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

namespace catfam {

OrbitTrace orbit(const Sequence& s, Endomorphism e, std::uint64_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("orbit: max_steps must be positive");

  OrbitTrace trace{s, 0, 1, {}, {s}};
  std::unordered_map<Sequence, std::size_t, SequenceHash> seen;
  seen.emplace(s, 0);

  for (std::uint64_t step = 0; step < max_steps; ++step) {
    Sequence next = apply(e, trace.visited.back());
    if (auto it = seen.find(next); it != seen.end()) {
      const std::size_t entry = it->second;
      trace.steps_to_cycle = entry;
      trace.period = trace.visited.size() - entry;
      trace.cycle.assign(trace.visited.begin() + static_cast<std::ptrdiff_t>(entry),
                         trace.visited.end());
      // canonical rotation: cycle starts at its lex-smallest element
      std::size_t smallest = 0;
      for (std::size_t i = 1; i < trace.cycle.size(); ++i) {
        if (lex_compare(trace.cycle[i], trace.cycle[smallest]) < 0) smallest = i;
      }
      std::rotate(trace.cycle.begin(),
                  trace.cycle.begin() + static_cast<std::ptrdiff_t>(smallest),
                  trace.cycle.end());
      return trace;
    }
    seen.emplace(next, trace.visited.size());
    trace.visited.push_back(std::move(next));
  }
  throw BudgetExceeded("orbit: no repeat within " + std::to_string(max_steps) + " steps");
}

std::uint64_t default_max_steps(Endomorphism e, int generation) {
  const auto n = static_cast<std::uint64_t>(generation);
  switch (e) {
    case Endomorphism::delta:
    case Endomorphism::delta_fast:
      return n * (n + 1) / 2 + 1;
    case Endomorphism::gamma:
    case Endomorphism::mu:
      return n * (n + 1) + 1;
  }
  throw std::logic_error("unknown endomorphism");
}

OrbitTrace orbit(const Sequence& s, Endomorphism e) {
  return orbit(s, e, default_max_steps(e, s.generation()));
}

Stabilization stabilize_delta(const Sequence& s) {
  Stabilization result{s, 0};
  for (;;) {
    Sequence next = delta(result.terminal);
    if (next == result.terminal) return result;
    result.terminal = std::move(next);
    ++result.steps;
  }
}

Stabilization find_double_point_gamma(const Sequence& s) {
  Stabilization result{s, 0};
  Sequence once = gamma(result.terminal);
  Sequence twice = gamma(once);
  while (twice != result.terminal) {
    result.terminal = std::move(once);
    ++result.steps;
    once = std::move(twice);
    twice = gamma(once);
  }
  return result;
}

bool is_fixed(const Sequence& s, Endomorphism e) { return apply(e, s) == s; }

namespace {

void check_cap(int generation, const CensusOptions& opts) {
  if (generation > opts.generation_cap) {
    throw CapExceeded("census at generation " + std::to_string(generation) +
                      " exceeds cap " + std::to_string(opts.generation_cap));
  }
}

}  // namespace

std::uint64_t count_fixed_points_delta(int generation, const CensusOptions& opts) {
  check_cap(generation, opts);
  return parallel_census(generation, opts.workers,
                         [](const Sequence& s) { return delta(s) == s; });
}

std::uint64_t count_double_points_gamma(int generation, const CensusOptions& opts) {
  check_cap(generation, opts);
  return parallel_census(generation, opts.workers,
                         [](const Sequence& s) { return gamma(gamma(s)) == s; });
}

}  // namespace catfam
