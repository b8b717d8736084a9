#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace catfam {

// Exact arbitrary-precision count. No floating point enters any formula in
// this module; every division is an integer division checked for zero
// remainder.
using BigCount = boost::multiprecision::cpp_int;

// Throws std::logic_error on a non-zero remainder: the closed formulas
// divide exactly, so a remainder means the implementation is wrong.
BigCount exact_div(const BigCount& numerator, const BigCount& denominator);

// Multiplicative scheme: multiply then exact-divide once per step, keeping
// every intermediate a binomial coefficient.
BigCount binomial(std::uint64_t n, std::uint64_t k);

// c_n = C(2n, n) / (n + 1).
BigCount catalan(std::uint64_t n);

// c_m(n) = C((m+1)n, n) / (mn + 1); fuss_catalan(1, n) == catalan(n).
// Counts rooted (m+1)-ary trees with n interior vertices, and the
// generation-(n-1) sequences with m-increase. Requires m >= 1.
BigCount fuss_catalan(std::uint64_t m, std::uint64_t n);

// Number of words of `ones` +1's and `neg_ones` -1's whose partial sums
// stay non-negative: (n+1-k)/(n+1) * C(n+k, n). Requires neg_ones <= ones.
BigCount ballot_count(std::uint64_t ones, std::uint64_t neg_ones);

// Number of generation-n unit-increase sequences ending in r:
// (r+1)/(n+1) * C(2n-r, n). Summed over r it gives catalan(n+1).
BigCount unit_increase_count_closed(std::uint64_t n, std::uint64_t r);

// Number of generation-n family members named r: catalan(r) * catalan(n-r).
BigCount name_distribution_closed(std::uint64_t n, std::uint64_t r);

}  // namespace catfam
