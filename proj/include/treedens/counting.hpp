#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treedens/errors.hpp"
#include "treedens/numeric.hpp"
#include "treedens/tree.hpp"

namespace treedens {

// Cap on binom(|T|, |D|) for the brute-force counter.
inline constexpr std::int64_t kDefaultSubsetBudget = 10'000'000;

// Exact copy count of a pattern in a host, with the density.
struct CountResult {
  BigInt copies;         // c(D, T)
  BigInt total_subsets;  // binom(|T|, |D|)
  Rational density;      // copies / total_subsets; 0 when |D| > |T|
};

// Copies through each leaf of the host, in DFS leaf order; entries sum to
// |D| * c(D, T).
struct LeafCopyProfile {
  std::vector<BigInt> per_leaf;
};

// Copy counting by dynamic programming over host vertices.
//
// The copies of a pattern P under a host vertex v split by the position of
// the induced root: either all selected leaves lie in one child of v
// (recurse into that child), or they span several children, the induced
// root is v itself, and every spanning child contributes exactly one root
// branch of P. The spanning case assigns the branch multiset of P to
// distinct children through a secondary DP whose state is the vector of
// still-unassigned multiplicities; identical branches are interchangeable,
// so counting states rather than assignments never double-counts a leaf
// set. The sub-patterns that can appear are exactly the full subtrees at
// internal vertices of P, plus the single leaf, whose count under v is the
// number of leaves there.
//
// Entries are memoized by (pattern code, host subtree code), so isomorphic
// host subtrees are evaluated once across a whole enumeration workload.
// The memo is guarded by insert-if-absent under a mutex; values for a key
// are always identical, so concurrent counters may share an instance.
class CopyCounter {
 public:
  CopyCounter() = default;
  CopyCounter(const CopyCounter&) = delete;
  CopyCounter& operator=(const CopyCounter&) = delete;

  // c(D, T); requires |D| >= 2.
  BigInt copies(const Tree& pattern, const Tree& host) {
    if (pattern.leaf_count() < 2)
      throw DomainError("pattern must have at least 2 leaves");
    return count_rec(canonicalize(pattern), host);
  }

  CountResult count(const Tree& pattern, const Tree& host) {
    CountResult result;
    result.copies = copies(pattern, host);
    result.total_subsets =
        binomial(BigInt(host.leaf_count()),
                 static_cast<std::int64_t>(pattern.leaf_count()));
    result.density = result.total_subsets > 0
                         ? Rational(result.copies, result.total_subsets)
                         : Rational(0);
    return result;
  }

  // c_l(D, T) for every leaf l, via c_l = c(D, T) - c(D, T minus l).
  LeafCopyProfile through_leaf(const Tree& pattern, const Tree& host) {
    const BigInt total = copies(pattern, host);
    LeafCopyProfile profile;
    const std::size_t n = host.leaf_count();
    profile.per_leaf.resize(n);
    if (n < 2) return profile;
    const Tree canonical_pattern = canonicalize(pattern);
    for (std::size_t l = 0; l < n; ++l)
      profile.per_leaf[l] =
          total - count_rec(canonical_pattern, detail::remove_leaf(host, l));
    return profile;
  }

 private:
  BigInt count_rec(const Tree& pattern, const Tree& vertex) {
    if (pattern.is_leaf()) return BigInt(vertex.leaf_count());
    if (vertex.leaf_count() < pattern.leaf_count()) return 0;
    const std::string key =
        pattern.canonical_code() + "|" + vertex.canonical_code();
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    BigInt total = 0;
    for (const Tree& child : vertex.children())
      total += count_rec(pattern, child);
    total += span_count(pattern, vertex);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(std::move(key), std::move(total)).first->second;
  }

  // Copies of `pattern` whose induced root is `vertex` itself.
  BigInt span_count(const Tree& pattern, const Tree& vertex) {
    // Distinct root branches of the pattern with multiplicities; the
    // pattern is canonical, so equal branches are adjacent.
    std::vector<const Tree*> types;
    std::vector<std::size_t> mult;
    for (const Tree& branch : pattern.children()) {
      if (!types.empty() &&
          types.back()->canonical_code() == branch.canonical_code()) {
        ++mult.back();
      } else {
        types.push_back(&branch);
        mult.push_back(1);
      }
    }
    if (vertex.children().size() < pattern.children().size()) return 0;

    // State: remaining multiplicity per branch type, mixed-radix encoded.
    std::vector<std::size_t> stride(types.size());
    std::size_t nstates = 1;
    for (std::size_t j = 0; j < types.size(); ++j) {
      stride[j] = nstates;
      nstates *= mult[j] + 1;
    }
    std::vector<BigInt> weight(nstates, BigInt(0));
    weight[nstates - 1] = 1;  // everything still unassigned
    for (const Tree& child : vertex.children()) {
      std::vector<BigInt> next = weight;  // child left unused
      for (std::size_t state = 0; state < nstates; ++state) {
        if (weight[state] == 0) continue;
        for (std::size_t j = 0; j < types.size(); ++j) {
          if ((state / stride[j]) % (mult[j] + 1) == 0) continue;
          const BigInt ways = count_rec(*types[j], child);
          if (ways != 0) next[state - stride[j]] += weight[state] * ways;
        }
      }
      weight = std::move(next);
    }
    return weight[0];
  }

  std::unordered_map<std::string, BigInt> memo_;
  std::mutex mutex_;
};

// One-shot conveniences; batch workloads should hold a CopyCounter.
inline CountResult count_copies(const Tree& pattern, const Tree& host) {
  return CopyCounter().count(pattern, host);
}

inline Rational density(const Tree& pattern, const Tree& host) {
  return count_copies(pattern, host).density;
}

inline LeafCopyProfile count_through_leaf(const Tree& pattern,
                                          const Tree& host) {
  return CopyCounter().through_leaf(pattern, host);
}

// Definition-level counter: iterates every |D|-subset of leaves, induces
// it and tests isomorphism. Independent of the DP above; serves as its
// oracle. Refuses hosts where binom(|T|, |D|) exceeds the budget.
inline CountResult brute_force_count(
    const Tree& pattern, const Tree& host,
    std::int64_t subset_budget = kDefaultSubsetBudget) {
  if (pattern.leaf_count() < 2)
    throw DomainError("pattern must have at least 2 leaves");
  const std::size_t n = host.leaf_count();
  const std::size_t k = pattern.leaf_count();
  CountResult result;
  result.copies = 0;
  result.total_subsets =
      binomial(BigInt(n), static_cast<std::int64_t>(k));
  if (result.total_subsets > subset_budget)
    throw BudgetError("subset budget exceeded: binom(" + std::to_string(n) +
                      "," + std::to_string(k) + ") = " +
                      result.total_subsets.str() + " > " +
                      std::to_string(subset_budget));
  if (k > n) {
    result.density = 0;
    return result;
  }
  const std::string target = canonicalize(pattern).canonical_code();
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    if (induce(host, LeafSet(comb)).canonical_code() == target)
      ++result.copies;
    // next k-combination of {0..n-1} in lexicographic order
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  result.density = result.total_subsets > 0
                       ? Rational(result.copies, result.total_subsets)
                       : Rational(0);
  return result;
}

}  // namespace treedens
