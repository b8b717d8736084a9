#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "catfam/sequence.hpp"

namespace catfam {

// A word over {+m, -1} whose partial sums stay non-negative; that property
// is checked at construction. Entries are the symbol weights.
//
// Text form: '+' and '-' for weight-1 symbols ("++--"); a positive symbol
// of weight m > 1 renders as the decimal weight in brackets ("[2]--").
class BallotWord {
 public:
  BallotWord() = default;  // empty word
  explicit BallotWord(std::vector<std::int32_t> symbols);

  const std::vector<std::int32_t>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  friend bool operator==(const BallotWord&, const BallotWord&) = default;

 private:
  std::vector<std::int32_t> symbols_;
};

std::string to_string(const BallotWord& w);
BallotWord parse_ballot_word(std::string_view text);

// a_0 = 0 and a_{i+1} <= a_i + m with all terms non-negative. For m = 1
// such sequences are automatically subdiagonal.
bool is_m_increase(const Sequence& s, Term m);
bool is_unit_increase(const Sequence& s);

// Lazily walks all generation-n m-increase sequences in lexicographic
// order. There are fuss_catalan(m, n+1) of them; for m = 1 this is the
// unit-increase tree level, of size catalan(n+1).
class MIncreaseRange {
 public:
  MIncreaseRange(Term m, int generation);

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
      return it.done_;
    }

   private:
    friend class MIncreaseRange;
    iterator(Term m, int generation);

    Term m_;
    Sequence current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(m_, generation_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Term m_;
  int generation_;
};

inline MIncreaseRange unit_increase_range(int generation) {
  return MIncreaseRange(1, generation);
}

// Block encoding of an m-increase sequence: for each i < n, one +m symbol
// followed by b_i = a_i - a_{i+1} + m minus-ones. The word ends up with n
// positive symbols, mn - a_n minus-ones, and non-negative partial sums.
BallotWord encode_ballot_m(const Sequence& a, Term m);
BallotWord encode_ballot(const Sequence& a);  // m = 1

// Inverse: parse the word into blocks, recover each b_i as the run length,
// then a_{i+1} = a_i + m - b_i from a_0 = 0. The generation is implied by
// the number of blocks; the empty word decodes to (0). Throws
// std::domain_error on a positive symbol of the wrong weight.
Sequence decode_ballot_m(const BallotWord& w, Term m);
Sequence decode_ballot(const BallotWord& w);  // m = 1

// The root-to-vertex label path of a unit-increase sequence in the tree
// whose root is labelled 2 and where a vertex labelled x has children
// labelled 2..x+1: every label shifts up by 2. The m-increase variant
// shifts by m + 1 (root label m + 1, children of x labelled m+1..m+x).
std::vector<Term> west_tree_labels(const Sequence& a);
std::vector<Term> west_tree_labels_m(const Sequence& a, Term m);

}  // namespace catfam
