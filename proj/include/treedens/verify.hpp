#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "treedens/constructions.hpp"
#include "treedens/counting.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/errors.hpp"
#include "treedens/extremal.hpp"
#include "treedens/numeric.hpp"
#include "treedens/tree.hpp"

namespace treedens {

// Machine-readable outcome of one verification suite. A failing check
// appends the exact witness; details carry suite-specific measurements.
struct VerifyReport {
  std::string suite;
  nlohmann::json params;
  bool pass = true;
  std::vector<std::string> failures;
  nlohmann::json details;

  void fail(std::string witness) {
    pass = false;
    failures.push_back(std::move(witness));
  }

  nlohmann::json to_json() const {
    return nlohmann::json{{"suite", suite},
                          {"params", params},
                          {"pass", pass},
                          {"failures", failures},
                          {"details", details}};
  }
};

namespace detail {

// Every d-ary shape of height at most h: the leaf plus every root whose
// children are a multiset of 2..d shapes of height at most h-1. Distinct
// multisets of canonical shapes give distinct shapes, so no deduplication
// is needed.
inline std::vector<Tree> shapes_of_height_at_most(int d, int h) {
  if (h == 0) return {Tree::leaf()};
  const std::vector<Tree> below = shapes_of_height_at_most(d, h - 1);
  std::vector<Tree> result = {Tree::leaf()};
  std::vector<const Tree*> pick;
  const auto choose = [&](auto&& self, std::size_t from,
                          std::size_t slots) -> void {
    if (slots == 0) {
      std::vector<Tree> children;
      children.reserve(pick.size());
      for (const Tree* p : pick) children.push_back(*p);
      result.push_back(canonicalize(Tree(std::move(children))));
      return;
    }
    for (std::size_t i = from; i < below.size(); ++i) {
      pick.push_back(&below[i]);
      self(self, i, slots - 1);
      pick.pop_back();
    }
  };
  for (int s = 2; s <= d; ++s) choose(choose, 0, static_cast<std::size_t>(s));
  return result;
}

// For a host of height >= k-1, a concrete leaf set inducing F^2_k: walk a
// deepest path from the root and take one leaf from a sibling branch at
// each of its top k-1 vertices, plus one leaf from the path's k-1st
// descendant.
inline LeafSet caterpillar_witness(const Tree& t, int k) {
  if (t.height() < static_cast<std::size_t>(k - 1))
    throw DomainError("host is too shallow for a caterpillar witness");
  std::vector<std::size_t> leaves;
  const Tree* vertex = &t;
  std::size_t offset = 0;  // DFS index of the first leaf under `vertex`
  for (int step = 0; step < k - 1; ++step) {
    // deepest child continues the path; any other child donates a leaf
    std::size_t deepest = 0;
    for (std::size_t i = 1; i < vertex->children().size(); ++i)
      if (vertex->children()[i].height() >
          vertex->children()[deepest].height())
        deepest = i;
    std::size_t child_offset = offset;
    std::optional<std::size_t> donated;
    for (std::size_t i = 0; i < vertex->children().size(); ++i) {
      if (i != deepest && !donated) donated = child_offset;
      if (i == deepest) offset = child_offset;
      child_offset += vertex->children()[i].leaf_count();
    }
    leaves.push_back(*donated);
    vertex = &vertex->children()[deepest];
  }
  leaves.push_back(offset);  // leftmost leaf below the path
  std::sort(leaves.begin(), leaves.end());
  return LeafSet(std::move(leaves));
}

inline std::string fraction(const Rational& r) { return to_fraction_string(r); }

}  // namespace detail

// Criterion: the dynamic program equals the subset-iteration oracle on
// every (host, pattern) pair in range.
inline VerifyReport verify_oracle(int max_d = 3, std::size_t max_host = 8,
                                  std::size_t max_pattern = 4) {
  VerifyReport report;
  report.suite = "oracle";
  report.params = {{"max_d", max_d},
                   {"max_host_leaves", max_host},
                   {"max_pattern_leaves", max_pattern}};
  CopyCounter dp;
  std::size_t pairs = 0;
  for (int d = 2; d <= max_d; ++d) {
    for (std::size_t k = 2; k <= max_pattern; ++k) {
      for (const Tree& pattern : all_trees({d, k, false})) {
        for (std::size_t n = 1; n <= max_host; ++n) {
          for (const Tree& host : all_trees({d, n, false})) {
            ++pairs;
            const BigInt fast = dp.copies(pattern, host);
            const BigInt slow = brute_force_count(pattern, host).copies;
            if (fast != slow)
              report.fail("c(" + pattern.canonical_code() + ", " +
                          host.canonical_code() + "): dp=" + fast.str() +
                          " oracle=" + slow.str());
          }
        }
      }
    }
  }
  report.details["pairs_checked"] = pairs;
  return report;
}

// Criterion: for every host, the k-leaf shapes partition the k-subsets:
// sum over all k-leaf d-ary D of c(D, T) = binom(|T|, k).
inline VerifyReport verify_completeness(int max_d = 3,
                                        std::size_t max_host = 8,
                                        std::size_t max_pattern = 4) {
  VerifyReport report;
  report.suite = "completeness";
  report.params = {{"max_d", max_d},
                   {"max_host_leaves", max_host},
                   {"max_pattern_leaves", max_pattern}};
  CopyCounter dp;
  std::size_t identities = 0;
  for (int d = 2; d <= max_d; ++d) {
    for (std::size_t n = 1; n <= max_host; ++n) {
      for (const Tree& host : all_trees({d, n, false})) {
        for (std::size_t k = 2; k <= max_pattern; ++k) {
          ++identities;
          BigInt sum = 0;
          for (const Tree& pattern : all_trees({d, k, false}))
            sum += dp.copies(pattern, host);
          const BigInt expected =
              binomial(BigInt(n), static_cast<std::int64_t>(k));
          if (sum != expected)
            report.fail("host " + host.canonical_code() + " k=" +
                        std::to_string(k) + ": sum=" + sum.str() +
                        " binom=" + expected.str());
        }
      }
    }
  }
  report.details["identities_checked"] = identities;
  return report;
}

// Criterion: over strictly d-ary hosts, c(C_k, T) (d^k - d) <=
// binom(d,k) (n^k - n), with equality exactly on the complete trees for
// k >= 3; and the 9-leaf strict ternary maximum for C_3 is 5/14, attained
// only by the complete tree.
inline VerifyReport verify_star_bound(
    int d = 3, std::vector<std::size_t> leaf_counts = {3, 5, 7, 9, 11, 13},
    int k = 3) {
  VerifyReport report;
  report.suite = "stars";
  report.params = {{"d", d}, {"k", k}, {"leaf_counts", leaf_counts}};
  CopyCounter dp;
  const Tree star = build_star(k);
  const BigInt dk = int_pow(BigInt(d), static_cast<std::uint64_t>(k)) - d;
  const BigInt dchoose = binomial(BigInt(d), k);
  std::vector<std::string> equality_cases;
  for (std::size_t n : leaf_counts) {
    for (const Tree& host : all_trees({d, n, true})) {
      const BigInt lhs = dp.copies(star, host) * dk;
      const BigInt rhs =
          dchoose * (int_pow(BigInt(n), static_cast<std::uint64_t>(k)) -
                     BigInt(n));
      if (lhs > rhs)
        report.fail("bound broken at " + host.canonical_code());
      const bool complete =
          host.canonical_code() ==
          build_complete(d, static_cast<int>(host.height())).canonical_code();
      if ((lhs == rhs) != complete)
        report.fail("equality/completeness mismatch at " +
                    host.canonical_code());
      if (lhs == rhs)
        equality_cases.push_back("n=" + std::to_string(n) + " " +
                                 host.canonical_code());
    }
  }
  report.details["equality_cases"] = equality_cases;
  const bool has_n9 =
      std::find(leaf_counts.begin(), leaf_counts.end(), 9) !=
      leaf_counts.end();

  // observed strict-vs-general deviation (the strict maximum can only be
  // smaller; nothing sharper is asserted)
  nlohmann::json deviations = nlohmann::json::array();
  for (std::size_t n : leaf_counts) {
    if (n > 9) continue;  // keep the general universes cheap
    if (all_trees({d, n, true}).empty()) continue;
    const Rational strict_max = max_density(star, {d, n, true}, &dp).max_density;
    const Rational general_max =
        max_density(star, {d, n, false}, &dp).max_density;
    if (strict_max > general_max)
      report.fail("strict maximum exceeds the general one at n=" +
                  std::to_string(n));
    deviations.push_back({{"n", n},
                          {"strict", detail::fraction(strict_max)},
                          {"general", detail::fraction(general_max)},
                          {"gap", detail::fraction(general_max - strict_max)}});
  }
  report.details["strict_vs_general"] = deviations;

  if (has_n9) {
    const MaxDensityResult md = max_density(star, {d, 9, true}, &dp);
    report.details["max_density_n9"] = detail::fraction(md.max_density);
    if (md.max_density != Rational(5, 14))
      report.fail("strict ternary maximum at n=9 is " +
                  detail::fraction(md.max_density) + ", expected 5/14");
    if (md.maximizers != std::vector<std::string>{
                             build_complete(3, 2).canonical_code()})
      report.fail("n=9 maximizer set is not exactly the complete tree");
  }
  return report;
}

// Criterion: the closed-form star inducibilities, with strict growth in d.
inline VerifyReport verify_star_formulas(int max_d = 10) {
  VerifyReport report;
  report.suite = "stars";
  report.params = {{"max_d", max_d}};
  const std::vector<std::pair<std::pair<int, int>, Rational>> pinned = {
      {{3, 3}, Rational(1, 4)},
      {{4, 3}, Rational(2, 5)},
      {{4, 4}, Rational(2, 21)}};
  for (const auto& [dk, expected] : pinned) {
    const Rational got = star_inducibility(dk.first, dk.second);
    if (got != expected)
      report.fail("i_" + std::to_string(dk.first) + "(C_" +
                  std::to_string(dk.second) + ") = " + detail::fraction(got) +
                  ", expected " + detail::fraction(expected));
  }
  for (int d = 2; d <= max_d; ++d)
    if (star_inducibility(d, 2) != 1)
      report.fail("i_d(C_2) != 1 at d=" + std::to_string(d));
  for (int k : {3, 4, 5}) {
    for (int d = k; d < max_d; ++d) {
      if (!(star_inducibility(d, k) < star_inducibility(d + 1, k)))
        report.fail("i_d(C_" + std::to_string(k) +
                    ") not increasing at d=" + std::to_string(d));
    }
  }
  return report;
}

// Criterion: the caterpillar copy-count formula equals the dynamic
// program on every feasible (d, k, n), and collapses to binom(n, k) for
// binary hosts.
inline VerifyReport verify_caterpillars(std::vector<int> ds = {2, 3, 4},
                                        int max_k = 6,
                                        std::int64_t max_n = 21) {
  VerifyReport report;
  report.suite = "caterpillars";
  report.params = {{"d", ds}, {"max_k", max_k}, {"max_n", max_n}};
  CopyCounter dp;
  std::size_t checked = 0;
  for (int d : ds) {
    for (std::int64_t n = d; n <= max_n; n += d - 1) {
      const Tree host = build_caterpillar(d, static_cast<int>(n));
      for (int k = 2; k <= max_k; ++k) {
        ++checked;
        const BigInt formula = caterpillar_count(d, k, n);
        const BigInt counted = dp.copies(build_caterpillar(2, k), host);
        if (formula != counted)
          report.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) +
                      " n=" + std::to_string(n) + ": formula=" +
                      formula.str() + " dp=" + counted.str());
        if (d == 2 && formula != binomial(BigInt(n), k))
          report.fail("binary collapse broken at k=" + std::to_string(k) +
                      " n=" + std::to_string(n));
      }
    }
  }
  report.details["triples_checked"] = checked;
  return report;
}

// Criterion: the maximum density of a pattern over n-leaf d-ary trees is
// non-increasing in n, and the enclosing interval [M_n (1 - k(k-1)/n),
// M_n] has positive, strictly shrinking width.
inline VerifyReport verify_monotone(const Tree& pattern, int d,
                                    std::size_t n_from, std::size_t n_to) {
  VerifyReport report;
  report.suite = "monotone";
  report.params = {{"pattern", pattern.canonical_code()},
                   {"d", d},
                   {"n_from", n_from},
                   {"n_to", n_to}};
  CopyCounter dp;
  const std::size_t k = pattern.leaf_count();
  std::optional<Rational> previous;
  std::optional<Rational> previous_width;
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t n = n_from; n <= n_to; ++n) {
    const MaxDensityResult md = max_density(pattern, {d, n, false}, &dp);
    const Rational width =
        md.max_density * Rational(BigInt(k * (k - 1)), BigInt(n));
    const Rational lower = md.max_density - width;
    table.push_back({{"n", n},
                     {"max_density", detail::fraction(md.max_density)},
                     {"lower", detail::fraction(lower)},
                     {"upper", detail::fraction(md.max_density)}});
    if (previous && md.max_density > *previous)
      report.fail("M_n increased from n=" + std::to_string(n - 1) + " to " +
                  std::to_string(n));
    if (!(width > 0))
      report.fail("degenerate interval at n=" + std::to_string(n));
    if (previous_width && !(width < *previous_width))
      report.fail("interval width did not shrink at n=" + std::to_string(n));
    previous = md.max_density;
    previous_width = width;
  }
  report.details["table"] = table;
  return report;
}

inline VerifyReport verify_monotone() {
  return verify_monotone(build_complete(2, 2), 2, 4, 12);
}

// Criterion: G keeps the leaf count, lands in binary trees, never loses a
// copy of any binary pattern, and maps C_3 to F^2_3.
inline VerifyReport verify_gmap(std::size_t max_host = 9,
                                std::size_t max_pattern = 5) {
  VerifyReport report;
  report.suite = "gmap";
  report.params = {{"d", 3},
                   {"max_host_leaves", max_host},
                   {"max_pattern_leaves", max_pattern}};
  CopyCounter dp;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= max_host; n += 2) {
    for (const Tree& host : all_trees({3, n, true})) {
      const Tree image = g_map(host, 3);
      if (image.leaf_count() != host.leaf_count())
        report.fail("|G(T)| != |T| at " + host.canonical_code());
      if (!valid_for(image, 2))
        report.fail("G(T) not binary at " + host.canonical_code());
      for (std::size_t k = 2; k <= max_pattern; ++k) {
        for (const Tree& pattern : all_trees({2, k, false})) {
          ++pairs;
          if (dp.copies(pattern, image) < dp.copies(pattern, host))
            report.fail("copies dropped for B=" + pattern.canonical_code() +
                        " at T=" + host.canonical_code());
        }
      }
    }
  }
  if (g_map(build_star(3), 3).canonical_code() != "(*,(*,*))")
    report.fail("G(C_3) is not the 3-leaf binary caterpillar");
  report.details["pairs_checked"] = pairs;
  return report;
}

// Criterion: composing hosts multiplies opportunity:
// c(F(S1;S2), F(S1;T)) >= c(S2, T)^{|S1|}.
inline VerifyReport verify_compose(std::size_t max_s1 = 3,
                                   std::size_t max_s2 = 3,
                                   std::size_t max_t = 6) {
  VerifyReport report;
  report.suite = "compose";
  report.params = {{"max_s1", max_s1}, {"max_s2", max_s2}, {"max_t", max_t}};
  CopyCounter dp;
  std::size_t triples = 0;
  for (std::size_t a = 1; a <= max_s1; ++a) {
    for (const Tree& s1 : all_trees({3, a, false})) {
      for (std::size_t b = 2; b <= max_s2; ++b) {
        for (const Tree& s2 : all_trees({3, b, false})) {
          const Tree composed = compose(s1, s2);
          for (std::size_t c = 1; c <= max_t; ++c) {
            for (const Tree& t : all_trees({3, c, false})) {
              ++triples;
              const BigInt lhs = dp.copies(composed, compose(s1, t));
              const BigInt rhs = int_pow(dp.copies(s2, t),
                                         static_cast<std::uint64_t>(a));
              if (lhs < rhs)
                report.fail("S1=" + s1.canonical_code() + " S2=" +
                            s2.canonical_code() + " T=" + t.canonical_code() +
                            ": " + lhs.str() + " < " + rhs.str());
            }
          }
        }
      }
    }
  }
  report.details["triples_checked"] = triples;
  return report;
}

// Criterion: along T^[n+1] = F(D; T^[n]), copies obey
// c(D, T^[n+1]) >= |D| c(D, T^[n]) + |T^[n]|^{|D|}, and the iterated
// density for C_3 settles within 1/100 of its inducibility 1/4.
inline VerifyReport verify_iterate(int max_step = 5, int gamma_step = 7,
                                   Rational gamma_target = Rational(1, 4),
                                   Rational gamma_tolerance = Rational(1,
                                                                       100)) {
  VerifyReport report;
  report.suite = "iterate";
  report.params = {{"max_step", max_step}, {"gamma_step", gamma_step}};
  CopyCounter dp;
  const Tree pattern = build_star(3);
  Tree current = Tree::leaf();
  for (int step = 1; step <= max_step; ++step) {
    const Tree next = compose(pattern, current);
    const BigInt lhs = dp.copies(pattern, next);
    const BigInt rhs =
        pattern.leaf_count() *
            (current.is_leaf() ? BigInt(0) : dp.copies(pattern, current)) +
        int_pow(BigInt(current.leaf_count()),
                static_cast<std::uint64_t>(pattern.leaf_count()));
    if (lhs < rhs)
      report.fail("recurrence broken at step " + std::to_string(step) + ": " +
                  lhs.str() + " < " + rhs.str());
    current = next;
  }
  const Tree deep = iterate_compose(pattern, gamma_step);
  const Rational gamma = dp.count(pattern, deep).density;
  report.details["gamma"] = detail::fraction(gamma);
  report.details["gamma_leaves"] = deep.leaf_count();
  const Rational gap = gamma > gamma_target ? gamma - gamma_target
                                            : gamma_target - gamma;
  report.details["gamma_gap"] = detail::fraction(gap);
  if (gap > gamma_tolerance)
    report.fail("gamma(C_3, T^[" + std::to_string(gamma_step) + "]) = " +
                detail::fraction(gamma) + " is further than " +
                detail::fraction(gamma_tolerance) + " from " +
                detail::fraction(gamma_target));
  return report;
}

// Criterion: the strictly d-ary padding T* reaches the requested size with
// an intact ledger, and its pattern densities stay within 5 n^(-1/2) of
// the seed's.
inline VerifyReport verify_tstar(std::vector<int> ds = {2, 3},
                                 std::vector<std::size_t> ns = {13, 16, 25,
                                                                37},
                                 std::size_t max_pattern = 3) {
  VerifyReport report;
  report.suite = "tstar";
  report.params = {{"d", ds}, {"n", ns}, {"max_pattern_leaves", max_pattern}};
  CopyCounter dp;
  nlohmann::json gaps = nlohmann::json::array();
  for (int d : ds) {
    for (std::size_t n : ns) {
      if ((n - 1) % static_cast<std::size_t>(d - 1) != 0) continue;
      std::size_t root = detail::isqrt(n);
      Rational worst = 0;
      std::size_t seeds = 0;
      for (const Tree& seed : all_trees({d, root, false})) {
        ++seeds;
        const ConstructionTrace trace = t_star(seed, d, n);
        if (trace.result.leaf_count() != n || !strict_for(trace.result, d))
          report.fail("broken result for seed " + seed.canonical_code());
        if (trace.t_prime.leaf_count() !=
                seed.leaf_count() + trace.added_leaves ||
            trace.t_double_prime.leaf_count() !=
                seed.leaf_count() * trace.s.leaf_count() + trace.added_leaves ||
            trace.result.leaf_count() != trace.t_double_prime.leaf_count() +
                                             trace.s_p.leaf_count() - 1)
          report.fail("size ledger broken for seed " + seed.canonical_code());
        for (std::size_t k = 2; k <= max_pattern; ++k) {
          for (const Tree& pattern : all_trees({d, k, false})) {
            const Rational a = dp.count(pattern, seed).density;
            const Rational b = dp.count(pattern, trace.result).density;
            const Rational gap = a > b ? a - b : b - a;
            if (gap > worst) worst = gap;
          }
        }
      }
      // gap <= 5 / sqrt(n), compared exactly as gap^2 n <= 25
      const bool within = worst * worst * n <= 25;
      gaps.push_back({{"d", d},
                      {"n", n},
                      {"seeds", seeds},
                      {"max_gap", detail::fraction(worst)},
                      {"max_gap_float",
                       worst.convert_to<double>()},
                      {"bound_ok", within}});
      if (!within)
        report.fail("density gap " + detail::fraction(worst) +
                    " exceeds 5/sqrt(" + std::to_string(n) + ")");
    }
  }
  report.details["gaps"] = gaps;
  return report;
}

// Criterion: every d-ary tree whose leaf count exceeds d^(k-2) contains
// the k-leaf binary caterpillar; the height test agrees with a positive
// copy count on every enumerated tree; the 4-leaf complete binary tree
// misses F^2_4.
//
// Universes just above the threshold are enumerated outright while their
// size permits. Where they do not (d=3, k=5 starts at 28 leaves and the
// universe has ~10^13 shapes), the same statement is verified through its
// two halves: every d-ary shape of height <= k-2 — an exhaustively
// enumerable class — has at most d^(k-2) leaves, so the threshold forces
// height >= k-1; and the deep-path witness extraction, validated per
// instance by induce() on every tree this suite touches plus the full
// strict universe inside the window, exhibits the copy that a height
// >= k-1 guarantees.
inline VerifyReport verify_containment(std::vector<int> ds = {2, 3},
                                       std::vector<int> ks = {3, 4, 5},
                                       std::size_t window = 3,
                                       std::size_t equivalence_max = 8,
                                       std::int64_t direct_budget = 200'000) {
  VerifyReport report;
  report.suite = "containment";
  report.params = {{"d", ds},
                   {"k", ks},
                   {"window", window},
                   {"equivalence_max_leaves", equivalence_max},
                   {"direct_budget", direct_budget}};
  CopyCounter dp;
  nlohmann::json routes = nlohmann::json::array();

  const auto check_tree = [&](const Tree& t, int k) -> bool {
    const Tree target = build_caterpillar(2, k);
    bool ok = dp.copies(target, t) >= 1;
    const LeafSet witness = detail::caterpillar_witness(t, k);
    ok = ok && is_isomorphic(induce(t, witness), target);
    return ok;
  };

  for (int d : ds) {
    for (int k : ks) {
      std::size_t threshold = 1;
      for (int i = 0; i < k - 2; ++i)
        threshold *= static_cast<std::size_t>(d);
      BigInt universe_total = 0;
      for (std::size_t n = threshold + 1; n <= threshold + window; ++n)
        universe_total += count_trees({d, n, false});
      if (universe_total <= direct_budget) {
        std::size_t checked = 0;
        for (std::size_t n = threshold + 1; n <= threshold + window; ++n) {
          TreeStream stream({d, n, false});
          while (auto t = stream.next()) {
            ++checked;
            if (!check_tree(*t, k))
              report.fail("no copy of F^2_" + std::to_string(k) + " in " +
                          t->canonical_code());
          }
        }
        routes.push_back({{"d", d},
                          {"k", k},
                          {"route", "direct"},
                          {"trees_checked", checked}});
      } else {
        // (i) the complement class is exhaustible: height <= k-2 caps the
        // leaf count at d^(k-2)
        const auto shallow = detail::shapes_of_height_at_most(d, k - 2);
        std::size_t max_leaves = 0;
        for (const Tree& t : shallow)
          max_leaves = std::max(max_leaves, t.leaf_count());
        if (max_leaves > threshold)
          report.fail("a height<=" + std::to_string(k - 2) +
                      " tree has more than d^(k-2) leaves");
        // (ii) witness the containment across the strict universes inside
        // the window, which stay enumerable
        std::size_t witnessed = 0;
        for (std::size_t n = threshold + 1; n <= threshold + window; ++n) {
          if ((n - 1) % static_cast<std::size_t>(d - 1) != 0) continue;
          if (count_trees({d, n, true}) > direct_budget) continue;
          TreeStream stream({d, n, true});
          while (auto t = stream.next()) {
            ++witnessed;
            if (!check_tree(*t, k))
              report.fail("no copy of F^2_" + std::to_string(k) + " in " +
                          t->canonical_code());
          }
        }
        routes.push_back({{"d", d},
                          {"k", k},
                          {"route", "complement"},
                          {"universe_size", universe_total.str()},
                          {"shallow_shapes", shallow.size()},
                          {"max_shallow_leaves", max_leaves},
                          {"strict_trees_witnessed", witnessed}});
      }
    }
  }

  // the height test tracks positive copy counts exactly
  std::size_t equivalence_checked = 0;
  for (int d : ds) {
    for (std::size_t n = 1; n <= equivalence_max; ++n) {
      for (const Tree& t : all_trees({d, n, false})) {
        for (int k : ks) {
          ++equivalence_checked;
          const bool by_height = contains_binary_caterpillar(t, k);
          const bool by_count = dp.copies(build_caterpillar(2, k), t) >= 1;
          if (by_height != by_count)
            report.fail("height test disagrees with counts at " +
                        t.canonical_code() + " k=" + std::to_string(k));
          if (by_height && !is_isomorphic(
                               induce(t, detail::caterpillar_witness(t, k)),
                               build_caterpillar(2, k)))
            report.fail("witness extraction failed at " + t.canonical_code() +
                        " k=" + std::to_string(k));
        }
      }
    }
  }
  report.details["equivalence_checked"] = equivalence_checked;
  report.details["routes"] = routes;

  if (contains_binary_caterpillar(build_complete(2, 2), 4))
    report.fail("complete binary height 2 must not contain F^2_4");
  return report;
}

// Bundles both star checks under the one suite name.
inline VerifyReport verify_stars(std::size_t max_leaves = 13) {
  std::vector<std::size_t> leaf_counts;
  for (std::size_t n = 3; n <= max_leaves; n += 2) leaf_counts.push_back(n);
  VerifyReport bound = verify_star_bound(3, leaf_counts);
  VerifyReport formulas = verify_star_formulas();
  VerifyReport report;
  report.suite = "stars";
  report.params = {{"bound", bound.params}, {"formulas", formulas.params}};
  report.pass = bound.pass && formulas.pass;
  report.failures = bound.failures;
  report.failures.insert(report.failures.end(), formulas.failures.begin(),
                         formulas.failures.end());
  report.details = {{"bound", bound.details}, {"formulas", formulas.details}};
  return report;
}

// Named dispatch used by the command line. `max_leaves`, when given,
// clamps the suite's dominant size range; everything else keeps the
// acceptance-grade defaults.
inline VerifyReport run_suite(const std::string& name,
                              std::optional<std::size_t> max_leaves =
                                  std::nullopt) {
  const auto capped = [&](std::size_t preset) {
    return max_leaves ? std::min(*max_leaves, preset) : preset;
  };
  if (name == "oracle") return verify_oracle(3, capped(8));
  if (name == "completeness") return verify_completeness(3, capped(8));
  if (name == "stars") return verify_stars(capped(13));
  if (name == "caterpillars")
    return verify_caterpillars({2, 3, 4}, 6,
                               static_cast<std::int64_t>(capped(21)));
  if (name == "monotone")
    return verify_monotone(build_complete(2, 2), 2, 4,
                           std::max<std::size_t>(capped(12), 4));
  if (name == "gmap") return verify_gmap(capped(9));
  if (name == "compose") return verify_compose(3, 3, capped(6));
  if (name == "iterate") return verify_iterate();
  if (name == "tstar") {
    std::vector<std::size_t> ns;
    for (std::size_t n : {13, 16, 25, 37})
      if (!max_leaves || n <= *max_leaves) ns.push_back(n);
    return verify_tstar({2, 3}, ns);
  }
  if (name == "containment")
    return verify_containment({2, 3}, {3, 4, 5}, 3, capped(8));
  throw DomainError("unknown suite '" + name +
                    "'; expected one of oracle, stars, caterpillars, "
                    "monotone, gmap, compose, iterate, tstar, containment, "
                    "completeness");
}

}  // namespace treedens
