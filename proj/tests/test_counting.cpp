#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "treedens/counting.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/tree.hpp"

using namespace treedens;

namespace {

// Deterministic random shape with the exact leaf count.
Tree random_tree(int d, std::size_t n, std::mt19937& rng) {
  if (n == 1) return Tree::leaf();
  const std::size_t max_children = std::min<std::size_t>(d, n);
  std::uniform_int_distribution<std::size_t> arity(2, max_children);
  const std::size_t s = arity(rng);
  // split n into s positive parts
  std::vector<std::size_t> parts(s, 1);
  for (std::size_t extra = n - s; extra > 0; --extra)
    ++parts[std::uniform_int_distribution<std::size_t>(0, s - 1)(rng)];
  std::vector<Tree> children;
  for (std::size_t part : parts) children.push_back(random_tree(d, part, rng));
  return Tree(std::move(children));
}

}  // namespace

TEST_CASE("brute force oracle on frozen examples") {
  // c(F^2_3, F^3_5): 6 of the binom(5,3) = 10 subsets induce the pattern
  const CountResult r =
      brute_force_count(parse("(*,(*,*))"), parse("(*,*,(*,*,*))"));
  CHECK(r.copies == 6);
  CHECK(r.total_subsets == 10);
  CHECK(r.density == Rational(3, 5));

  // every pair of leaves induces the cherry
  CHECK(brute_force_count(parse("(*,*)"), parse("((*,*),(*,*))")).copies == 6);

  // a ternary root cannot embed in a binary host
  CHECK(brute_force_count(parse("(*,*,*)"), build_caterpillar(2, 6)).copies ==
        0);
}

TEST_CASE("brute force refuses oversized hosts") {
  CHECK_THROWS_AS(brute_force_count(build_star(2), build_star(100), 1000),
                  BudgetError);
  CHECK_NOTHROW(brute_force_count(build_star(2), build_star(100), 5000));
}

TEST_CASE("count_copies on the spec examples") {
  CopyCounter dp;
  // c(C_2, T) = binom(|T|, 2) for any host
  for (const Tree& t : all_trees({3, 7, false}))
    CHECK(dp.count(build_star(2), t).copies == 21);

  // the star bound is attained by the complete ternary tree
  CHECK(dp.count(build_star(3), build_complete(3, 2)).copies == 30);

  CHECK(dp.count(parse("(*,(*,*))"), parse("(*,*,(*,*,*))")).copies == 6);

  // pattern larger than host
  const CountResult r = dp.count(build_star(3), parse("(*,*)"));
  CHECK(r.copies == 0);
  CHECK(r.total_subsets == 0);
  CHECK(r.density == 0);

  CHECK_THROWS_AS(dp.count(Tree::leaf(), build_star(3)), DomainError);
}

TEST_CASE("dynamic program agrees with the oracle exhaustively") {
  CopyCounter dp;
  for (int d : {2, 3}) {
    for (std::size_t k = 2; k <= 4; ++k) {
      for (const Tree& pattern : all_trees({d, k, false})) {
        for (std::size_t n = 2; n <= 7; ++n) {
          for (const Tree& host : all_trees({d, n, false})) {
            CHECK(dp.copies(pattern, host) ==
                  brute_force_count(pattern, host).copies);
          }
        }
      }
    }
  }
}

TEST_CASE("dynamic program is order-insensitive in the host") {
  CopyCounter dp;
  const Tree host = parse("(((*,*),*),(*,(*,*,*)),*)");
  const Tree shuffled = parse("(*,((*,*,*),*),(*,(*,*)))");
  REQUIRE(is_isomorphic(host, shuffled));
  for (const Tree& pattern : all_trees({3, 3, false}))
    CHECK(dp.copies(pattern, host) == dp.copies(pattern, shuffled));
}

TEST_CASE("completeness: k-subsets split exactly over the k-leaf shapes") {
  CopyCounter dp;
  for (int d : {2, 3}) {
    for (std::size_t n = 2; n <= 7; ++n) {
      for (const Tree& host : all_trees({d, n, false})) {
        for (std::size_t k = 2; k <= 4 && k <= n; ++k) {
          BigInt sum = 0;
          for (const Tree& pattern : all_trees({d, k, false}))
            sum += dp.copies(pattern, host);
          CHECK(sum == binomial(BigInt(n), static_cast<std::int64_t>(k)));
        }
      }
    }
  }
}

TEST_CASE("dynamic program survives a seeded random stress run") {
  // hosts beyond the exhaustive range, patterns with 5 leaves
  std::mt19937 rng(20240811);
  CopyCounter dp;
  for (int round = 0; round < 40; ++round) {
    const int d = 2 + round % 3;
    const std::size_t n = 9 + round % 4;  // 9..12 leaves
    const Tree host = random_tree(d, n, rng);
    REQUIRE(host.leaf_count() == n);
    for (std::size_t k = 3; k <= 5; ++k) {
      const Tree pattern = random_tree(d, k, rng);
      CHECK(dp.copies(pattern, host) ==
            brute_force_count(pattern, host).copies);
    }
  }
}

TEST_CASE("a shared counter gives identical answers across threads") {
  CopyCounter shared;
  const auto hosts = all_trees({3, 7, false});
  const auto patterns = all_trees({3, 3, false});
  std::vector<std::vector<BigInt>> results(4);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < results.size(); ++w) {
    workers.emplace_back([&, w] {
      for (const Tree& host : hosts)
        for (const Tree& pattern : patterns)
          results[w].push_back(shared.copies(pattern, host));
    });
  }
  for (std::thread& t : workers) t.join();
  std::vector<BigInt> expected;
  CopyCounter fresh;
  for (const Tree& host : hosts)
    for (const Tree& pattern : patterns)
      expected.push_back(fresh.copies(pattern, host));
  for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("per-leaf copy profile") {
  // frozen via the subset oracle: 10 subsets, profile (3,3,4,4,4)
  const LeafCopyProfile p =
      count_through_leaf(parse("(*,(*,*))"), parse("(*,*,(*,*,*))"));
  REQUIRE(p.per_leaf.size() == 5);
  CHECK(p.per_leaf[0] == 3);
  CHECK(p.per_leaf[1] == 3);
  CHECK(p.per_leaf[2] == 4);
  CHECK(p.per_leaf[3] == 4);
  CHECK(p.per_leaf[4] == 4);

  // cherry pattern: every leaf pairs with the n-1 others
  for (const Tree& t : all_trees({2, 6, false}))
    for (const BigInt& c : count_through_leaf(build_star(2), t).per_leaf)
      CHECK(c == 5);
}

TEST_CASE("profile sum and averaging relations") {
  CopyCounter dp;
  for (int d : {2, 3}) {
    for (std::size_t n = 3; n <= 6; ++n) {
      for (const Tree& host : all_trees({d, n, false})) {
        for (const Tree& pattern : all_trees({d, 3, false})) {
          const BigInt total = dp.copies(pattern, host);
          const LeafCopyProfile p = dp.through_leaf(pattern, host);
          BigInt sum = 0;
          BigInt lo = p.per_leaf[0], hi = p.per_leaf[0];
          for (const BigInt& c : p.per_leaf) {
            sum += c;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          CHECK(sum == pattern.leaf_count() * total);
          // some leaf is below the average, some above
          CHECK(lo * n <= pattern.leaf_count() * total);
          CHECK(hi * n >= pattern.leaf_count() * total);
        }
      }
    }
  }
}

TEST_CASE("densities") {
  CHECK(density(build_star(3), build_complete(3, 2)) == Rational(5, 14));
  CHECK(density(build_star(3), build_caterpillar(2, 8)) == 0);
  // binary caterpillars have density 1 in binary caterpillars
  for (int k = 2; k <= 6; ++k)
    for (int n = k; n <= 8; ++n)
      CHECK(density(build_caterpillar(2, k), build_caterpillar(2, n)) == 1);
}

TEST_CASE("star bound with equality exactly on complete hosts") {
  // c(C_k, T) <= binom(d,k) (n^k - n) / (d^k - d), compared cross-multiplied
  CopyCounter dp;
  for (int d : {2, 3}) {
    for (std::size_t n = 1; n <= 9; ++n) {
      for (const Tree& host : all_trees({d, n, true})) {
        for (int k = 2; k <= d; ++k) {
          const auto e = static_cast<std::uint64_t>(k);
          const BigInt lhs = dp.copies(build_star(k), host) *
                             (int_pow(BigInt(d), e) - BigInt(d));
          const BigInt rhs = binomial(BigInt(d), k) *
                             (int_pow(BigInt(n), e) - BigInt(n));
          CHECK(lhs <= rhs);
          if (k == 2) {
            CHECK(lhs == rhs);  // c(C_2, T) = binom(n, 2) for every host
          } else {
            const bool complete =
                host.canonical_code() ==
                build_complete(d, static_cast<int>(host.height()))
                    .canonical_code();
            CHECK((lhs == rhs) == complete);
          }
        }
      }
    }
  }
}
