#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace treedens {

// All counts are arbitrary-precision integers and all densities exact
// rationals; theorems are checked with exact comparisons, never floats.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binom(n, k); 0 when k < 0 or k > n.
inline BigInt binomial(const BigInt& n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: a product of i+1 consecutive integers
  }
  return result;
}

inline BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

inline BigInt int_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1, b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    if (exp >>= 1) b *= b;
  }
  return result;
}

// Number of multisets of size k drawn from n kinds: binom(n+k-1, k).
inline BigInt multiset_coefficient(const BigInt& n, std::int64_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  return binomial(n + k - 1, k);
}

// Lowest-terms "p/q" rendering used by every machine-readable output.
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace treedens
