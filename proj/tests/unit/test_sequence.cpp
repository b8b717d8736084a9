#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "catfam/errors.hpp"
#include "catfam/sequence.hpp"

using namespace catfam;

namespace {

std::vector<Sequence> collect(const GenerationRange& range) {
  std::vector<Sequence> out;
  for (const Sequence& s : range) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("sequence construction and accessors") {
  const Sequence s({0, 1, 1});
  CHECK(s.size() == 3);
  CHECK(s.generation() == 2);
  CHECK(s[1] == 1);
  CHECK(s.name() == 1);
  CHECK_THROWS_AS(Sequence({}), std::invalid_argument);
}

TEST_CASE("subdiagonal membership") {
  CHECK(is_subdiagonal(Sequence({0, 1, 2})));
  CHECK_FALSE(is_subdiagonal(Sequence({0, 0, 3})));
  CHECK_FALSE(is_subdiagonal(Sequence({1})));
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_compare(Sequence({0, 0, 1}), Sequence({0, 0, 2})) < 0);
  CHECK(lex_compare(Sequence({0, 1, 0}), Sequence({0, 1, 0})) == 0);
  CHECK(lex_compare(Sequence({0, 1, 0}), Sequence({0, 0, 2})) > 0);
  CHECK_THROWS_AS(lex_compare(Sequence({0}), Sequence({0, 1})), std::invalid_argument);
}

TEST_CASE("text format") {
  CHECK(to_string(Sequence({0, 1, 1})) == "0,1,1");
  CHECK(parse_sequence("0,1,1") == Sequence({0, 1, 1}));
  CHECK(parse_sequence("7") == Sequence({7}));
  CHECK_THROWS_AS(parse_sequence(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("0,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("0,1,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("0, 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("-1,0"), std::invalid_argument);
}

TEST_CASE("factorials and level sizes") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == 2432902008176640000ull);
  CHECK_THROWS_AS(factorial(21), CapExceeded);
  CHECK(generation_size(0) == 1);
  CHECK(generation_size(6) == 5040);
  // generation 19 is the last one whose rank space fits in 64 bits
  CHECK(generation_size(kMaxGeneration) == factorial(20));
  CHECK_THROWS_AS(generation_size(kMaxGeneration + 1), CapExceeded);
}

TEST_CASE("generation walk: small levels are exactly right") {
  CHECK(collect(GenerationRange(0)) == std::vector<Sequence>{Sequence({0})});

  const std::vector<Sequence> level2 = {
      Sequence({0, 0, 0}), Sequence({0, 0, 1}), Sequence({0, 0, 2}),
      Sequence({0, 1, 0}), Sequence({0, 1, 1}), Sequence({0, 1, 2}),
  };
  CHECK(collect(GenerationRange(2)) == level2);
}

TEST_CASE("generation walk: count, validity, strict lex order") {
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t count = 0;
    const Sequence* prev = nullptr;
    Sequence last({0});
    for (const Sequence& s : GenerationRange(n)) {
      CHECK(is_subdiagonal(s));
      if (prev != nullptr) CHECK(lex_compare(last, s) < 0);
      last = s;
      prev = &last;
      ++count;
    }
    CHECK(count == generation_size(n));
  }
}

TEST_CASE("rank access agrees with walking order") {
  const auto level = collect(GenerationRange(4));
  for (std::uint64_t r = 0; r < level.size(); r += 7) {
    CHECK(sequence_at_rank(4, r) == level[r]);
  }
  CHECK_THROWS_AS(sequence_at_rank(4, generation_size(4)), std::invalid_argument);
}

TEST_CASE("rank sub-ranges tile the level") {
  const auto whole = collect(GenerationRange(5));
  std::vector<Sequence> pieces;
  const std::uint64_t total = generation_size(5);
  for (std::uint64_t lo = 0; lo < total; lo += 100) {
    const auto part = collect(GenerationRange(5, lo, std::min(lo + 100, total)));
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  CHECK(pieces == whole);
  CHECK(GenerationRange(5, 17, 17).size() == 0);
  CHECK_THROWS_AS(GenerationRange(5, 10, 9), std::invalid_argument);
}
