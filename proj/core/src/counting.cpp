#include "catfam/counting.hpp"

#include <stdexcept>

namespace catfam {

BigCount exact_div(const BigCount& numerator, const BigCount& denominator) {
  BigCount quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_div: non-zero remainder");
  }
  return quotient;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result = exact_div(result, i);
  }
  return result;
}

BigCount catalan(std::uint64_t n) {
  return exact_div(binomial(2 * n, n), n + 1);
}

BigCount fuss_catalan(std::uint64_t m, std::uint64_t n) {
  if (m < 1) throw std::invalid_argument("fuss_catalan: m must be >= 1");
  return exact_div(binomial((m + 1) * n, n), m * n + 1);
}

BigCount ballot_count(std::uint64_t ones, std::uint64_t neg_ones) {
  if (neg_ones > ones) {
    throw std::invalid_argument("ballot_count: more -1's than +1's");
  }
  return exact_div((ones + 1 - neg_ones) * binomial(ones + neg_ones, ones), ones + 1);
}

BigCount unit_increase_count_closed(std::uint64_t n, std::uint64_t r) {
  if (r > n) throw std::invalid_argument("unit_increase_count_closed: r > n");
  return exact_div((r + 1) * binomial(2 * n - r, n), n + 1);
}

BigCount name_distribution_closed(std::uint64_t n, std::uint64_t r) {
  if (r > n) throw std::invalid_argument("name_distribution_closed: r > n");
  return catalan(r) * catalan(n - r);
}

}  // namespace catfam
