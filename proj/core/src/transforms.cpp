#include "catfam/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace catfam {

std::optional<Endomorphism> parse_endomorphism(std::string_view name) {
  if (name == "delta") return Endomorphism::delta;
  if (name == "delta-fast") return Endomorphism::delta_fast;
  if (name == "gamma") return Endomorphism::gamma;
  if (name == "mu") return Endomorphism::mu;
  return std::nullopt;
}

std::string_view to_string(Endomorphism e) {
  switch (e) {
    case Endomorphism::delta: return "delta";
    case Endomorphism::delta_fast: return "delta-fast";
    case Endomorphism::gamma: return "gamma";
    case Endomorphism::mu: return "mu";
  }
  return "?";
}

Sequence delta(const Sequence& s) {
  const auto& a = s.terms();
  std::vector<Term> out(a.size(), 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Term v = a[i];
    Term count = 0;
    for (std::size_t j = 0; j < i; ++j) count += a[j] < v;
    out[i] = count;
  }
  return Sequence(std::move(out));
}

namespace {

// Fenwick tree over 1-based value ranks; prefix_sum(r) counts inserted
// terms of rank <= r.
class RankCounter {
 public:
  explicit RankCounter(std::size_t universe) : tree_(universe + 1, 0) {}

  void insert(std::size_t rank) {
    for (std::size_t i = rank; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }

  Term prefix_sum(std::size_t rank) const {
    Term sum = 0;
    for (std::size_t i = rank; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

 private:
  std::vector<Term> tree_;
};

}  // namespace

Sequence delta_fast(const Sequence& s) {
  const auto& a = s.terms();
  // coordinate-compress the values; equal terms share a rank, so ties
  // contribute nothing to the strict count
  std::vector<Term> sorted(a);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto rank_of = [&](Term v) {
    return static_cast<std::size_t>(
               std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) +
           1;
  };

  RankCounter counter(sorted.size());
  std::vector<Term> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t r = rank_of(a[i]);
    out[i] = counter.prefix_sum(r - 1);
    counter.insert(r);
  }
  return Sequence(std::move(out));
}

Sequence mu(const Sequence& s) {
  if (!is_subdiagonal(s)) {
    throw std::domain_error("mu: input is not subdiagonal");
  }
  const auto& a = s.terms();
  std::vector<Term> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Term>(i) - a[i];
  }
  return Sequence(std::move(out));
}

Sequence gamma(const Sequence& s) {
  if (!is_subdiagonal(s)) {
    throw std::domain_error("gamma: input is not subdiagonal");
  }
  const auto& a = s.terms();
  std::vector<Term> out(a.size(), 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Term v = a[i];
    Term count = 0;
    for (std::size_t j = 0; j < i; ++j) count += a[j] >= v;
    out[i] = count;
  }
  return Sequence(std::move(out));
}

Sequence apply(Endomorphism e, const Sequence& s) {
  switch (e) {
    case Endomorphism::delta: return delta(s);
    case Endomorphism::delta_fast: return delta_fast(s);
    case Endomorphism::gamma: return gamma(s);
    case Endomorphism::mu: return mu(s);
  }
  throw std::logic_error("unknown endomorphism");
}

}  // namespace catfam
