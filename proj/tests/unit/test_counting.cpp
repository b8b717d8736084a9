#include <doctest.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "catfam/counting.hpp"

using namespace catfam;

namespace {

// Oracle: the convolution recursion, independent of the binomial route.
std::vector<BigCount> catalan_by_recursion(std::size_t max_n) {
  std::vector<BigCount> c(max_n + 1);
  c[0] = 1;
  for (std::size_t n = 0; n < max_n; ++n) {
    BigCount sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += c[i] * c[n - i];
    c[n + 1] = sum;
  }
  return c;
}

// Oracle: count words of `ones` +1's and `negs` -1's with non-negative
// partial sums by placing one symbol at a time.
std::uint64_t ballot_brute_force(std::uint64_t ones, std::uint64_t negs) {
  std::uint64_t count = 0;
  std::function<void(std::uint64_t, std::uint64_t, std::int64_t)> place =
      [&](std::uint64_t o, std::uint64_t k, std::int64_t sum) {
        if (o == 0 && k == 0) {
          ++count;
          return;
        }
        if (o > 0) place(o - 1, k, sum + 1);
        if (k > 0 && sum > 0) place(o, k - 1, sum - 1);
      };
  place(ones, negs, 0);
  return count;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(5, 9) == 0);
  CHECK(binomial(64, 32) == BigCount("1832624140942590534"));
}

TEST_CASE("catalan numbers: formula vs recursion") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);

  const auto rec = catalan_by_recursion(30);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    CHECK(catalan(n) == rec[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("fuss-catalan numbers") {
  CHECK(fuss_catalan(1, 5) == 42);
  CHECK(fuss_catalan(2, 2) == 3);
  CHECK(fuss_catalan(2, 3) == 12);
  CHECK(fuss_catalan(3, 7) == 53820);
  CHECK_THROWS_AS(fuss_catalan(0, 3), std::invalid_argument);

  for (std::uint64_t n = 0; n <= 20; ++n) {
    CHECK(fuss_catalan(1, n) == catalan(n));
  }
}

TEST_CASE("ballot counts") {
  CHECK(ballot_count(3, 2) == 5);
  CHECK(ballot_count(9, 0) == 1);
  CHECK(ballot_count(4, 4) == catalan(4));
  CHECK_THROWS_AS(ballot_count(2, 3), std::invalid_argument);

  for (std::uint64_t n = 0; n <= 6; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      CHECK(ballot_count(n, k) == ballot_brute_force(n, k));
    }
  }
}

TEST_CASE("unit-increase label counts") {
  CHECK(unit_increase_count_closed(2, 0) == 2);
  CHECK(unit_increase_count_closed(2, 2) == 1);
  CHECK(unit_increase_count_closed(9, 9) == 1);
  CHECK_THROWS_AS(unit_increase_count_closed(3, 4), std::invalid_argument);

  for (std::uint64_t n = 0; n <= 30; ++n) {
    BigCount row = 0;
    for (std::uint64_t r = 0; r <= n; ++r) row += unit_increase_count_closed(n, r);
    CHECK(row == catalan(n + 1));
  }
}

TEST_CASE("family name counts") {
  CHECK(name_distribution_closed(2, 1) == 1);
  CHECK(name_distribution_closed(7, 0) == catalan(7));
  CHECK(name_distribution_closed(4, 2) == 4);

  for (std::uint64_t n = 0; n <= 30; ++n) {
    BigCount row = 0;
    for (std::uint64_t r = 0; r <= n; ++r) row += name_distribution_closed(n, r);
    CHECK(row == catalan(n + 1));
  }
}

TEST_CASE("exact division refuses a remainder") {
  CHECK(exact_div(84, 7) == 12);
  CHECK_THROWS_AS(exact_div(5, 2), std::logic_error);
}
