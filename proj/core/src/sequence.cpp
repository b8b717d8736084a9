#include "catfam/sequence.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "catfam/errors.hpp"

namespace catfam {

Sequence::Sequence(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("sequence must have at least one term");
  }
}

bool is_subdiagonal(const Sequence& s) {
  const auto& a = s.terms();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > i) return false;
  }
  return true;
}

std::strong_ordering lex_compare(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("lex_compare: sequences of different generations");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

Sequence parse_sequence(std::string_view text) {
  std::vector<Term> terms;
  const char* p = text.data();
  const char* const end = p + text.size();
  while (true) {
    Term value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p) {
      throw std::invalid_argument("bad sequence text: expected decimal term");
    }
    terms.push_back(value);
    p = next;
    if (p == end) break;
    if (*p != ',') {
      throw std::invalid_argument("bad sequence text: expected ','");
    }
    ++p;
  }
  return Sequence(std::move(terms));
}

std::string to_string(const Sequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Sequence& s) {
  return os << to_string(s);
}

std::size_t SequenceHash::operator()(const Sequence& s) const noexcept {
  // FNV-1a over the terms
  std::uint64_t h = 1469598103934665603ull;
  for (Term t : s.terms()) {
    h ^= t;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  if (n > kMaxGeneration + 1) {
    throw CapExceeded("factorial(" + std::to_string(n) + ") exceeds 64 bits");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t generation_size(int generation) {
  if (generation < 0) throw std::invalid_argument("negative generation");
  return factorial(generation + 1);
}

Sequence sequence_at_rank(int generation, std::uint64_t rank) {
  const std::uint64_t total = generation_size(generation);
  if (rank >= total) {
    throw std::invalid_argument("rank out of range for generation");
  }
  // digit i is the rank divided by the weight of all digits to its right,
  // i.e. (n+1)!/(i+1)!
  std::vector<Term> terms(static_cast<std::size_t>(generation) + 1);
  std::uint64_t weight = total;
  for (int i = 0; i <= generation; ++i) {
    weight /= static_cast<std::uint64_t>(i + 1);
    terms[static_cast<std::size_t>(i)] = static_cast<Term>(rank / weight);
    rank %= weight;
  }
  return Sequence(std::move(terms));
}

GenerationRange::GenerationRange(int generation)
    : GenerationRange(generation, 0, generation_size(generation)) {}

GenerationRange::GenerationRange(int generation, std::uint64_t first_rank,
                                 std::uint64_t last_rank)
    : generation_(generation), first_(first_rank), last_(last_rank) {
  const std::uint64_t total = generation_size(generation);
  if (first_rank > last_rank || last_rank > total) {
    throw std::invalid_argument("bad rank sub-range");
  }
}

GenerationRange::iterator& GenerationRange::iterator::operator++() {
  --remaining_;
  if (remaining_ == 0) return *this;
  auto& terms = detail::terms_of(current_);
  // odometer step: digit i carries past i
  for (std::size_t i = terms.size(); i-- > 0;) {
    if (terms[i] < i) {
      ++terms[i];
      for (std::size_t j = i + 1; j < terms.size(); ++j) terms[j] = 0;
      return *this;
    }
  }
  // a sub-range ending at the level's last name never carries off the end
  // while remaining_ > 0; getting here means the range length was wrong
  throw std::logic_error("odometer overflow");
}

}  // namespace catfam
