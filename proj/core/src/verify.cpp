#include "catfam/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <utility>

#include "catfam/bijections.hpp"
#include "catfam/counting.hpp"
#include "catfam/dynamics.hpp"
#include "catfam/family.hpp"
#include "catfam/sequence.hpp"
#include "catfam/transforms.hpp"

namespace catfam {

namespace {

// Each check returns "" on success, or the first counterexample.

std::string fail(const std::string& message) { return message; }

std::string where(int n, const Sequence& s) {
  return "n=" + std::to_string(n) + " s=" + to_string(s);
}

// Deterministic sample of raw sequences, most of them not subdiagonal.
std::vector<Sequence> random_raw_sequences() {
  std::mt19937 rng(0x5eedu);
  std::vector<Sequence> out;
  for (int k = 0; k < 200; ++k) {
    std::uniform_int_distribution<std::size_t> len_dist(1, 40);
    const std::size_t len = len_dist(rng);
    std::vector<Term> terms(len);
    std::uniform_int_distribution<Term> term_dist(0, static_cast<Term>(2 * len));
    for (auto& t : terms) t = term_dist(rng);
    out.emplace_back(std::move(terms));
  }
  return out;
}

std::string check_delta_image_subdiagonal(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const Sequence& s : GenerationRange(n)) {
      if (!is_subdiagonal(delta(s))) return fail(where(n, s));
    }
  }
  for (const Sequence& s : random_raw_sequences()) {
    if (!is_subdiagonal(delta(s))) return fail("raw s=" + to_string(s));
  }
  return {};
}

std::string check_delta_fast_matches_delta(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const Sequence& s : GenerationRange(n)) {
      if (delta_fast(s) != delta(s)) return fail(where(n, s));
    }
  }
  for (const Sequence& s : random_raw_sequences()) {
    if (delta_fast(s) != delta(s)) return fail("raw s=" + to_string(s));
  }
  return {};
}

std::string check_gamma_is_mu_after_delta(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const Sequence& s : GenerationRange(n)) {
      if (gamma(s) != mu(delta(s))) return fail(where(n, s));
    }
  }
  return {};
}

std::string check_mu_is_involution(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const Sequence& s : GenerationRange(n)) {
      if (mu(mu(s)) != s) return fail(where(n, s));
    }
  }
  return {};
}

// a <= delta(a) in lex order, with equality exactly on family members.
std::string check_delta_growth(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const Sequence& s : GenerationRange(n)) {
      const auto order = lex_compare(s, delta(s));
      if (order > 0) return fail(where(n, s) + ": delta decreased");
      if ((order == 0) != is_family_member(s)) {
        return fail(where(n, s) + ": fixedness disagrees with membership");
      }
    }
  }
  return {};
}

std::string check_enumeration_order_and_count(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    std::uint64_t count = 0;
    std::vector<Term> prev;
    for (const Sequence& s : GenerationRange(n)) {
      if (!is_subdiagonal(s)) return fail(where(n, s) + ": not subdiagonal");
      if (count > 0 && !std::lexicographical_compare(prev.begin(), prev.end(),
                                                     s.terms().begin(), s.terms().end())) {
        return fail(where(n, s) + ": order not strictly increasing");
      }
      prev = s.terms();
      ++count;
    }
    if (count != generation_size(n)) {
      return fail("n=" + std::to_string(n) + ": count " + std::to_string(count) +
                  " != " + std::to_string(generation_size(n)));
    }
  }
  return {};
}

// Contiguous rank sub-ranges must tile the level exactly.
std::string check_enumeration_partitioning(int max_n) {
  for (int n = 0; n <= std::min(max_n, 7); ++n) {
    const std::uint64_t total = generation_size(n);
    const std::uint64_t cuts[4] = {0, total / 3, total / 3 + total / 4 + 1, total};
    auto full = GenerationRange(n).begin();
    for (int part = 0; part + 1 < 4; ++part) {
      const std::uint64_t lo = std::min(cuts[part], cuts[part + 1]);
      for (const Sequence& s : GenerationRange(n, lo, cuts[part + 1])) {
        if (s != *full) {
          return fail(where(n, s) + ": partition walk diverged");
        }
        ++full;
      }
    }
  }
  return {};
}

std::string check_delta_stabilization(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n) * (n + 1) / 2;
    for (const Sequence& s : GenerationRange(n)) {
      const auto [terminal, steps] = stabilize_delta(s);
      if (steps > bound) return fail(where(n, s) + ": took " + std::to_string(steps));
      if (delta(terminal) != terminal) return fail(where(n, s) + ": terminal not fixed");
      // the chain must strictly grow until the fixed point
      Sequence cur = s;
      for (;;) {
        Sequence next = delta(cur);
        if (next == cur) break;
        if (lex_compare(cur, next) >= 0) {
          return fail(where(n, s) + ": chain not strictly increasing");
        }
        cur = std::move(next);
      }
    }
  }
  return {};
}

std::string check_gamma_double_point_bound(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n) * (n + 1);
    for (const Sequence& s : GenerationRange(n)) {
      const auto [terminal, steps] = find_double_point_gamma(s);
      if (steps > bound) return fail(where(n, s) + ": took " + std::to_string(steps));
      if (gamma(gamma(terminal)) != terminal) {
        return fail(where(n, s) + ": terminal not a double point");
      }
    }
  }
  return {};
}

std::string check_gamma_orbit_period(int max_n) {
  for (int n = 0; n <= std::min(max_n, 6); ++n) {
    for (const Sequence& s : GenerationRange(n)) {
      const OrbitTrace trace = orbit(s, Endomorphism::gamma);
      if (trace.period > 2) {
        return fail(where(n, s) + ": period " + std::to_string(trace.period));
      }
    }
  }
  return {};
}

std::string check_gamma_unique_fixed_point(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    std::uint64_t fixed = 0;
    for (const Sequence& s : GenerationRange(n)) {
      if (gamma(s) == s) ++fixed;
    }
    const std::uint64_t expected = n == 0 ? 1 : 0;
    if (fixed != expected) {
      return fail("n=" + std::to_string(n) + ": " + std::to_string(fixed) +
                  " fixed points");
    }
  }
  return {};
}

std::string check_fixed_census_is_catalan(int max_n, int workers) {
  const CensusOptions opts{workers, kMaxGeneration};
  for (int n = 0; n <= std::min(max_n, 9); ++n) {
    const std::uint64_t census = count_fixed_points_delta(n, opts);
    if (catalan(static_cast<std::uint64_t>(n) + 1) != census) {
      return fail("n=" + std::to_string(n) + ": census " + std::to_string(census));
    }
  }
  return {};
}

std::string check_double_census_known_values(int max_n, int workers) {
  const CensusOptions opts{workers, kMaxGeneration};
  const std::uint64_t known[] = {1, 2, 4, 10, 26, 70, 216};
  for (int n = 0; n <= std::min(max_n, 6); ++n) {
    const std::uint64_t census = count_double_points_gamma(n, opts);
    if (census != known[n]) {
      return fail("n=" + std::to_string(n) + ": census " + std::to_string(census) +
                  " != " + std::to_string(known[n]));
    }
  }
  return {};
}

// More double points than 2^n from generation 3 on (the bound is exact at
// generations 0..2, where the counts are 1, 2, 4).
std::string check_double_census_exceeds_power(int max_n, int workers) {
  const CensusOptions opts{workers, kMaxGeneration};
  for (int n = 3; n <= std::min(max_n, 8); ++n) {
    const std::uint64_t census = count_double_points_gamma(n, opts);
    if (census <= (1ull << n)) {
      return fail("n=" + std::to_string(n) + ": census " + std::to_string(census));
    }
  }
  return {};
}

std::string check_family_census_matches_fixed_census(int max_n, int workers) {
  const CensusOptions opts{workers, kMaxGeneration};
  for (int n = 0; n <= std::min(max_n, 9); ++n) {
    std::uint64_t members = 0;
    visit_family_generation(n, [&](const FamilyNode&) { ++members; });
    const std::uint64_t census = count_fixed_points_delta(n, opts);
    if (members != census) {
      return fail("n=" + std::to_string(n) + ": " + std::to_string(members) +
                  " members, " + std::to_string(census) + " fixed points");
    }
  }
  return {};
}

std::string check_family_membership_matches_fixedness(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    for (const Sequence& s : GenerationRange(n)) {
      if (is_family_member(s) != is_fixed(s, Endomorphism::delta)) {
        return fail(where(n, s));
      }
    }
  }
  return {};
}

std::string check_family_children_shape(int max_n) {
  for (int n = 0; n <= std::min(max_n, 7); ++n) {
    std::string problem;
    visit_family_generation(n, [&](const FamilyNode& node) {
      if (!problem.empty()) return;
      const auto kids = children(node);
      if (kids.size() != node.seniority() + 2 || kids.size() != node.child_count()) {
        problem = where(n, node.full_name) + ": wrong child count";
        return;
      }
      if (kids.back().name() != static_cast<Term>(n) + 1) {
        problem = where(n, node.full_name) + ": youngest child not named n";
        return;
      }
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (kids[i].sibship.size() != i + 1 || kids[i].sibship.back() != kids[i].name()) {
          problem = where(n, node.full_name) + ": bad sibship at child " + std::to_string(i);
          return;
        }
      }
    });
    if (!problem.empty()) return problem;
  }
  return {};
}

std::string check_name_distribution(int max_n) {
  for (int n = 0; n <= std::min(max_n, 9); ++n) {
    const NameDistribution dist = name_distribution(n);
    for (int r = 0; r <= n; ++r) {
      if (name_distribution_closed(static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(r)) !=
          dist.counts[static_cast<std::size_t>(r)]) {
        return fail("n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
    if (catalan(static_cast<std::uint64_t>(n) + 1) != dist.total()) {
      return fail("n=" + std::to_string(n) + ": total mismatch");
    }
  }
  return {};
}

// z_{n+1} = g_n: next generation's name-0 count is this generation's size.
std::string check_name_zero_recursion(int max_n) {
  for (int n = 0; n <= std::min(max_n, 8); ++n) {
    std::uint64_t members = 0;
    visit_family_generation(n, [&](const FamilyNode&) { ++members; });
    if (name_distribution(n + 1).counts[0] != members) {
      return fail("n=" + std::to_string(n));
    }
  }
  return {};
}

std::string check_catalan_recursion() {
  std::vector<BigCount> rec(32);
  rec[0] = 1;
  for (std::size_t n = 0; n + 1 < rec.size(); ++n) {
    BigCount sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += rec[i] * rec[n - i];
    rec[n + 1] = sum;
  }
  for (std::uint64_t n = 0; n <= 31; ++n) {
    if (catalan(n) != rec[static_cast<std::size_t>(n)]) {
      return fail("n=" + std::to_string(n));
    }
  }
  return {};
}

std::string check_closed_row_sums() {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    BigCount names = 0;
    BigCount units = 0;
    for (std::uint64_t r = 0; r <= n; ++r) {
      names += name_distribution_closed(n, r);
      units += unit_increase_count_closed(n, r);
    }
    const BigCount expected = catalan(n + 1);
    if (names != expected) return fail("name row n=" + std::to_string(n));
    if (units != expected) return fail("unit row n=" + std::to_string(n));
  }
  return {};
}

std::string check_ballot_count_brute_force(int max_n) {
  for (std::uint64_t n = 0; n <= static_cast<std::uint64_t>(std::min(max_n, 8)); ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      std::uint64_t brute = 0;
      std::function<void(std::uint64_t, std::uint64_t, std::int64_t)> place =
          [&](std::uint64_t ones, std::uint64_t negs, std::int64_t sum) {
            if (ones == 0 && negs == 0) {
              ++brute;
              return;
            }
            if (ones > 0) place(ones - 1, negs, sum + 1);
            if (negs > 0 && sum > 0) place(ones, negs - 1, sum - 1);
          };
      place(n, k, 0);
      if (ballot_count(n, k) != brute) {
        return fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return {};
}

std::string check_m_increase_census_is_fuss(int max_n) {
  for (Term m = 1; m <= 3; ++m) {
    for (int n = 0; n <= std::min(max_n, 6); ++n) {
      std::uint64_t census = 0;
      for ([[maybe_unused]] const Sequence& s : MIncreaseRange(m, n)) ++census;
      if (fuss_catalan(m, static_cast<std::uint64_t>(n) + 1) != census) {
        return fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  return {};
}

std::string check_unit_increase_distribution(int max_n) {
  for (int n = 0; n <= std::min(max_n, 10); ++n) {
    std::vector<std::uint64_t> by_last(static_cast<std::size_t>(n) + 1, 0);
    for (const Sequence& s : unit_increase_range(n)) ++by_last[s.name()];
    for (int r = 0; r <= n; ++r) {
      if (unit_increase_count_closed(static_cast<std::uint64_t>(n),
                                     static_cast<std::uint64_t>(r)) !=
          by_last[static_cast<std::size_t>(r)]) {
        return fail("n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
  }
  return {};
}

std::string check_ballot_roundtrip(int max_n) {
  for (int n = 0; n <= std::min(max_n, 8); ++n) {
    for (const Sequence& s : unit_increase_range(n)) {
      const BallotWord word = encode_ballot(s);
      std::uint64_t ones = 0, negs = 0;
      std::int64_t sum = 0;
      for (std::int32_t sym : word.symbols()) {
        sym == -1 ? ++negs : ++ones;
        sum += sym;
        if (sum < 0) return fail(where(n, s) + ": negative partial sum");
      }
      if (ones != static_cast<std::uint64_t>(n)) return fail(where(n, s) + ": +1 count");
      if (negs != static_cast<std::uint64_t>(n) - s.name()) {
        return fail(where(n, s) + ": -1 count");
      }
      if (decode_ballot(word) != s) return fail(where(n, s) + ": roundtrip");
      if (parse_ballot_word(to_string(word)) != word) {
        return fail(where(n, s) + ": text roundtrip");
      }
    }
  }
  return {};
}

std::string check_m_ballot_roundtrip(int max_n) {
  for (Term m = 2; m <= 3; ++m) {
    for (int n = 0; n <= std::min(max_n, 5); ++n) {
      for (const Sequence& s : MIncreaseRange(m, n)) {
        const BallotWord word = encode_ballot_m(s, m);
        std::uint64_t pos = 0, negs = 0;
        for (std::int32_t sym : word.symbols()) sym == -1 ? ++negs : ++pos;
        if (pos != static_cast<std::uint64_t>(n)) {
          return fail(where(n, s) + ": positive count, m=" + std::to_string(m));
        }
        if (negs != static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n) - s.name()) {
          return fail(where(n, s) + ": -1 count, m=" + std::to_string(m));
        }
        if (decode_ballot_m(word, m) != s) {
          return fail(where(n, s) + ": roundtrip, m=" + std::to_string(m));
        }
      }
    }
  }
  return {};
}

std::string check_west_paths(int max_n) {
  for (int n = 0; n <= std::min(max_n, 8); ++n) {
    std::uint64_t paths = 0;
    for (const Sequence& s : unit_increase_range(n)) {
      const std::vector<Term> labels = west_tree_labels(s);
      if (labels[0] != 2) return fail(where(n, s) + ": root label");
      for (std::size_t i = 1; i < labels.size(); ++i) {
        if (labels[i] < 2 || labels[i] > labels[i - 1] + 1) {
          return fail(where(n, s) + ": illegal child label");
        }
      }
      ++paths;
    }
    if (catalan(static_cast<std::uint64_t>(n) + 1) != paths) {
      return fail("n=" + std::to_string(n) + ": path count");
    }
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const int e = opts.exhaustive_max;
  const int e7 = std::min(e, 7);
  const int w = opts.workers;

  const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
      {"delta-image-subdiagonal", [=] { return check_delta_image_subdiagonal(e7); }},
      {"delta-fast-matches-delta", [=] { return check_delta_fast_matches_delta(e7); }},
      {"gamma-is-mu-after-delta", [=] { return check_gamma_is_mu_after_delta(e7); }},
      {"mu-is-involution", [=] { return check_mu_is_involution(e7); }},
      {"delta-growth", [=] { return check_delta_growth(e7); }},
      {"enumeration-order-and-count", [=] { return check_enumeration_order_and_count(e); }},
      {"enumeration-partitioning", [=] { return check_enumeration_partitioning(e); }},
      {"delta-stabilization-bound", [=] { return check_delta_stabilization(e7); }},
      {"gamma-double-point-bound", [=] { return check_gamma_double_point_bound(e7); }},
      {"gamma-orbit-period-divides-2", [=] { return check_gamma_orbit_period(e); }},
      {"gamma-unique-fixed-point", [=] { return check_gamma_unique_fixed_point(e7); }},
      {"fixed-census-is-catalan", [=] { return check_fixed_census_is_catalan(e, w); }},
      {"double-census-known-values", [=] { return check_double_census_known_values(e, w); }},
      {"double-census-exceeds-2^n", [=] { return check_double_census_exceeds_power(e, w); }},
      {"family-census-matches-fixed-census",
       [=] { return check_family_census_matches_fixed_census(e, w); }},
      {"family-membership-matches-fixedness",
       [=] { return check_family_membership_matches_fixedness(e7); }},
      {"family-children-shape", [=] { return check_family_children_shape(e); }},
      {"name-distribution-closed-form", [=] { return check_name_distribution(e); }},
      {"name-zero-recursion", [=] { return check_name_zero_recursion(e); }},
      {"catalan-recursion", [] { return check_catalan_recursion(); }},
      {"closed-row-sums", [] { return check_closed_row_sums(); }},
      {"ballot-count-brute-force", [=] { return check_ballot_count_brute_force(e); }},
      {"m-increase-census-is-fuss-catalan", [=] { return check_m_increase_census_is_fuss(e); }},
      {"unit-increase-distribution", [=] { return check_unit_increase_distribution(e); }},
      {"ballot-roundtrip-and-shape", [=] { return check_ballot_roundtrip(e); }},
      {"m-ballot-roundtrip", [=] { return check_m_ballot_roundtrip(e); }},
      {"west-path-rule", [=] { return check_west_paths(e); }},
  };

  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (const auto& [name, fn] : checks) {
    CheckResult result{name, false, {}};
    try {
      result.detail = fn();
      result.passed = result.detail.empty();
    } catch (const std::exception& ex) {
      result.detail = std::string("exception: ") + ex.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

int report_verification(const std::vector<CheckResult>& results, std::ostream& os) {
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    if (r.passed) {
      os << "PASS " << r.name << "\n";
    } else {
      os << "FAIL " << r.name << ": " << r.detail << "\n";
      ++failed;
    }
  }
  os << (failed == 0 ? "all " : "") << results.size() - failed << "/" << results.size()
     << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace catfam
