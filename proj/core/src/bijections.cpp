#include "catfam/bijections.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace catfam {

BallotWord::BallotWord(std::vector<std::int32_t> symbols) : symbols_(std::move(symbols)) {
  std::int64_t sum = 0;
  for (std::int32_t s : symbols_) {
    if (s != -1 && s < 1) {
      throw std::domain_error("ballot word: symbols must be -1 or positive");
    }
    sum += s;
    if (sum < 0) {
      throw std::domain_error("ballot word: negative partial sum");
    }
  }
}

std::string to_string(const BallotWord& w) {
  std::string out;
  for (std::int32_t s : w.symbols()) {
    if (s == -1) {
      out += '-';
    } else if (s == 1) {
      out += '+';
    } else {
      out += '[';
      out += std::to_string(s);
      out += ']';
    }
  }
  return out;
}

BallotWord parse_ballot_word(std::string_view text) {
  std::vector<std::int32_t> symbols;
  const char* p = text.data();
  const char* const end = p + text.size();
  while (p != end) {
    if (*p == '+') {
      symbols.push_back(1);
      ++p;
    } else if (*p == '-') {
      symbols.push_back(-1);
      ++p;
    } else if (*p == '[') {
      ++p;
      std::int32_t weight = 0;
      auto [next, ec] = std::from_chars(p, end, weight);
      if (ec != std::errc() || next == end || *next != ']' || weight < 1) {
        throw std::invalid_argument("bad ballot word: malformed bracketed weight");
      }
      symbols.push_back(weight);
      p = next + 1;
    } else {
      throw std::invalid_argument("bad ballot word: expected '+', '-' or '[w]'");
    }
  }
  return BallotWord(std::move(symbols));
}

bool is_m_increase(const Sequence& s, Term m) {
  const auto& a = s.terms();
  if (a[0] != 0) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i + 1] > static_cast<std::uint64_t>(a[i]) + m) return false;
  }
  return true;
}

bool is_unit_increase(const Sequence& s) { return is_m_increase(s, 1); }

MIncreaseRange::MIncreaseRange(Term m, int generation) : m_(m), generation_(generation) {
  if (m < 1) throw std::invalid_argument("m-increase: m must be >= 1");
  if (generation < 0) throw std::invalid_argument("negative generation");
}

MIncreaseRange::iterator::iterator(Term m, int generation)
    : m_(m), current_(std::vector<Term>(static_cast<std::size_t>(generation) + 1, 0)) {}

MIncreaseRange::iterator& MIncreaseRange::iterator::operator++() {
  auto& a = detail::terms_of(current_);
  // next in lex order: bump the rightmost term still below its bound
  // a_{i-1} + m, zeroing everything to its right (0 is always legal)
  for (std::size_t i = a.size(); i-- > 1;) {
    if (a[i] < static_cast<std::uint64_t>(a[i - 1]) + m_) {
      ++a[i];
      for (std::size_t j = i + 1; j < a.size(); ++j) a[j] = 0;
      return *this;
    }
  }
  done_ = true;
  return *this;
}

BallotWord encode_ballot_m(const Sequence& a, Term m) {
  if (m > static_cast<Term>(std::numeric_limits<std::int32_t>::max())) {
    throw std::invalid_argument("encode: m does not fit a word symbol");
  }
  if (!is_m_increase(a, m)) {
    throw std::domain_error("encode: sequence does not have " + std::to_string(m) +
                            "-increase");
  }
  std::vector<std::int32_t> symbols;
  const auto& t = a.terms();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const auto drops = static_cast<std::int64_t>(t[i]) + m - t[i + 1];
    symbols.push_back(static_cast<std::int32_t>(m));
    symbols.insert(symbols.end(), static_cast<std::size_t>(drops), -1);
  }
  return BallotWord(std::move(symbols));
}

BallotWord encode_ballot(const Sequence& a) { return encode_ballot_m(a, 1); }

Sequence decode_ballot_m(const BallotWord& w, Term m) {
  std::vector<Term> a{0};
  const auto& symbols = w.symbols();
  std::size_t i = 0;
  while (i < symbols.size()) {
    // construction guarantees the word starts with a positive symbol; the
    // weight still has to match m
    if (symbols[i] != static_cast<std::int32_t>(m)) {
      throw std::domain_error("decode: positive symbol of weight " +
                              std::to_string(symbols[i]) + ", expected " +
                              std::to_string(m));
    }
    ++i;
    std::int64_t run = 0;
    while (i < symbols.size() && symbols[i] == -1) {
      ++run;
      ++i;
    }
    const std::int64_t next = static_cast<std::int64_t>(a.back()) + m - run;
    if (next < 0) {
      throw std::domain_error("decode: word leaves the sequence domain");
    }
    if (next > std::numeric_limits<Term>::max()) {
      throw std::domain_error("decode: term overflows the term type");
    }
    a.push_back(static_cast<Term>(next));
  }
  return Sequence(std::move(a));
}

Sequence decode_ballot(const BallotWord& w) { return decode_ballot_m(w, 1); }

std::vector<Term> west_tree_labels_m(const Sequence& a, Term m) {
  if (!is_m_increase(a, m)) {
    throw std::domain_error("west labels: sequence does not have " +
                            std::to_string(m) + "-increase");
  }
  std::vector<Term> labels;
  labels.reserve(a.size());
  for (Term t : a.terms()) {
    const std::uint64_t label = static_cast<std::uint64_t>(t) + m + 1;
    if (label > std::numeric_limits<Term>::max()) {
      throw std::invalid_argument("west labels: label overflows the term type");
    }
    labels.push_back(static_cast<Term>(label));
  }
  return labels;
}

std::vector<Term> west_tree_labels(const Sequence& a) {
  return west_tree_labels_m(a, 1);
}

}  // namespace catfam
