#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "treedens/counting.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/errors.hpp"
#include "treedens/numeric.hpp"
#include "treedens/tree.hpp"

namespace treedens {

// Outcome of maximizing a pattern density over one universe.
struct MaxDensityResult {
  std::size_t n = 0;
  int d = 2;
  bool strict = false;
  Rational max_density;
  std::vector<std::string> maximizers;  // canonical codes, sorted
};

// Exact maximum of the pattern density over the universe, with every
// maximizer. Deterministic: the stream is consumed in canonical order and
// ties are kept in that order.
inline MaxDensityResult max_density(const Tree& pattern,
                                    const EnumerationSpec& spec,
                                    CopyCounter* counter = nullptr) {
  spec.validate();
  if (pattern.leaf_count() > spec.n)
    throw DomainError("pattern has more leaves than the universe");
  if (!valid_for(pattern, spec.d))
    throw DomainError("pattern is not valid for d = " + std::to_string(spec.d));
  CopyCounter local;
  CopyCounter& dp = counter ? *counter : local;
  MaxDensityResult result;
  result.n = spec.n;
  result.d = spec.d;
  result.strict = spec.strict;
  TreeStream stream(spec);
  bool any = false;
  while (auto t = stream.next()) {
    const Rational gamma = dp.count(pattern, *t).density;
    if (!any || gamma > result.max_density) {
      any = true;
      result.max_density = gamma;
      result.maximizers.clear();
    }
    if (gamma == result.max_density)
      result.maximizers.push_back(t->canonical_code());
  }
  if (!any) throw DomainError("the universe is empty");
  return result;
}

// Rigorous enclosure of the inducibility from finite data.
struct InducibilityInterval {
  Tree pattern;
  int d = 2;
  std::size_t n_used = 0;
  Rational lower;
  Rational upper;
};

// I_d(pattern) lies in [M_n * (1 - k(k-1)/n), M_n] where M_n is the
// maximum density over the n-leaf d-ary (non-strict) universe and
// k = |pattern|. The multiplicative form is the tighter reading of the
// bound whenever M_n < 1. Requires n > k(k-1) so the lower end is
// positive.
inline InducibilityInterval inducibility_interval(const Tree& pattern, int d,
                                                  std::size_t n,
                                                  CopyCounter* counter =
                                                      nullptr) {
  const std::size_t k = pattern.leaf_count();
  if (k > n) throw DomainError("pattern has more leaves than n");
  if (n <= k * (k - 1))
    throw DomainError("n must exceed k(k-1) = " + std::to_string(k * (k - 1)) +
                      " for a positive lower bound");
  InducibilityInterval interval;
  interval.pattern = canonicalize(pattern);
  interval.d = d;
  interval.n_used = n;
  interval.upper =
      max_density(pattern, EnumerationSpec{d, n, false}, counter).max_density;
  interval.lower =
      interval.upper * Rational(BigInt(n - k * (k - 1)), BigInt(n));
  return interval;
}

// i_d(C_k) = d! / ((d-k)! * (d^k - d)) for 2 <= k <= d.
inline Rational star_inducibility(int d, int k) {
  if (d < 2) throw DomainError("degree bound must be at least 2");
  if (k < 2 || k > d)
    throw DomainError("star size k must satisfy 2 <= k <= d");
  BigInt falling = 1;
  for (int i = 0; i < k; ++i) falling *= d - i;
  return Rational(falling,
                  int_pow(BigInt(d), static_cast<std::uint64_t>(k)) - d);
}

// c(F^2_k, F^d_n) in closed form:
//   (d-1)^(k-1) * binom((n-1)/(d-1), k-1) * (2n - (d-2)(k-2)) / (2k).
// The quotient is exact; a non-integral value would mean the formula was
// applied outside its domain.
inline BigInt caterpillar_count(int d, int k, std::int64_t n) {
  if (d < 2) throw DomainError("degree bound must be at least 2");
  if (k < 2 || n < 2) throw DomainError("caterpillar_count needs k, n > 1");
  if ((n - 1) % (d - 1) != 0)
    throw DomainError("no strictly " + std::to_string(d) +
                      "-ary tree has " + std::to_string(n) + " leaves");
  const BigInt choices =
      binomial(BigInt((n - 1) / (d - 1)), static_cast<std::int64_t>(k - 1));
  if (choices == 0) return 0;
  const BigInt numerator =
      int_pow(BigInt(d - 1), static_cast<std::uint64_t>(k - 1)) * choices *
      (2 * n - static_cast<std::int64_t>(d - 2) * (k - 2));
  if (numerator % (2 * k) != 0)
    throw Error("caterpillar_count: non-integral value for d=" +
                std::to_string(d) + " k=" + std::to_string(k) +
                " n=" + std::to_string(n));
  return numerator / (2 * k);
}

// Universal lower bound (k-1)! / (k^(k-1) - 1) on i_d(D) for |D| = k.
inline Rational lower_bound_generic(int k) {
  if (k < 2) throw DomainError("pattern size must be at least 2");
  return Rational(factorial(k - 1),
                  int_pow(BigInt(k), static_cast<std::uint64_t>(k - 1)) - 1);
}

// Whether t contains a copy of the binary caterpillar F^2_k, which holds
// exactly when height(t) >= k - 1.
inline bool contains_binary_caterpillar(const Tree& t, int k) {
  if (k < 2) throw DomainError("caterpillar size must be at least 2");
  return t.height() >= static_cast<std::size_t>(k - 1);
}

}  // namespace treedens
