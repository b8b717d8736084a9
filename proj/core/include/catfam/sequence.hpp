#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catfam {

using Term = std::uint32_t;

// Largest generation whose level size (n+1)! still fits in 64 bits.
inline constexpr int kMaxGeneration = 19;

class Sequence;

namespace detail {
// In-place term access for the enumeration iterators. Internal.
std::vector<Term>& terms_of(Sequence& s);
}  // namespace detail

// A finite integer sequence (a_0, a_1, ..., a_n). Never empty. Its
// generation number is length - 1, the level of the matching tree vertex.
//
// Terms are unconstrained non-negative integers; membership in the name
// domain (0 <= a_i <= i at every index) is a property, not an invariant,
// so the same value type carries both raw inputs and tree names. See
// is_subdiagonal().
class Sequence {
 public:
  explicit Sequence(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int generation() const { return static_cast<int>(terms_.size()) - 1; }
  Term operator[](std::size_t i) const { return terms_[i]; }
  // The last term: a vertex's own name within its full name.
  Term name() const { return terms_.back(); }

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  friend std::vector<Term>& detail::terms_of(Sequence& s);

  std::vector<Term> terms_;
};

namespace detail {
inline std::vector<Term>& terms_of(Sequence& s) { return s.terms_; }
}  // namespace detail

// True iff 0 <= a_i <= i at every index (so a_0 = 0): the sequence is the
// full name of a tree vertex.
bool is_subdiagonal(const Sequence& s);

// Lexicographic comparison within one generation. Throws
// std::invalid_argument when the lengths differ.
std::strong_ordering lex_compare(const Sequence& a, const Sequence& b);

// Text form is "t0,t1,...,tn": decimal terms, commas, no whitespace.
Sequence parse_sequence(std::string_view text);
std::string to_string(const Sequence& s);
std::ostream& operator<<(std::ostream& os, const Sequence& s);

struct SequenceHash {
  std::size_t operator()(const Sequence& s) const noexcept;
};

// n! for n <= kMaxGeneration + 1; throws CapExceeded beyond that.
std::uint64_t factorial(int n);

// Number of generation-n names, (n+1)!.
std::uint64_t generation_size(int generation);

// The generation-n name at a given lexicographic rank in [0, (n+1)!).
Sequence sequence_at_rank(int generation, std::uint64_t rank);

// Lazily walks the names of one generation in lexicographic order.
// Digit i of the odometer runs over 0..i, so a full sweep yields all
// (n+1)! names without materializing them.
//
// A sub-range [first_rank, last_rank) walks the same order restricted to
// those ranks; contiguous sub-ranges tile the generation exactly, which is
// what lets censuses split work across threads and still sum to the
// sequential answer.
class GenerationRange {
 public:
  explicit GenerationRange(int generation);
  GenerationRange(int generation, std::uint64_t first_rank, std::uint64_t last_rank);

  class iterator {
   public:
    using value_type = Sequence;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    const Sequence& operator*() const { return current_; }
    const Sequence* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.remaining_ == 0;
    }

   private:
    friend class GenerationRange;
    iterator(Sequence first, std::uint64_t remaining)
        : current_(std::move(first)), remaining_(remaining) {}

    Sequence current_;
    std::uint64_t remaining_;
  };

  iterator begin() const {
    const std::uint64_t count = size();
    return iterator(sequence_at_rank(generation_, count == 0 ? 0 : first_), count);
  }
  std::default_sentinel_t end() const { return {}; }

  int generation() const { return generation_; }
  std::uint64_t size() const { return last_ - first_; }

 private:
  int generation_;
  std::uint64_t first_;
  std::uint64_t last_;
};

}  // namespace catfam
