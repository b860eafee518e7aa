#include <catch2/catch_amalgamated.hpp>

#include "treedens/constructions.hpp"
#include "treedens/counting.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/tree.hpp"

using namespace treedens;

TEST_CASE("g_map basics") {
  CHECK(serialize(g_map(build_star(3), 3)) == "(*,(*,*))");
  CHECK(g_map(Tree::leaf(), 3).is_leaf());
  CHECK(serialize(g_map(build_star(4), 4)) ==
        serialize(build_caterpillar(2, 4)));  // G(C_d) = F^2_d

  CHECK_THROWS_AS(g_map(parse("(*,(*,*))"), 3), DomainError);  // not strict
  CHECK_THROWS_AS(g_map(build_star(2), 2), DomainError);       // d < 3
}

TEST_CASE("g_map preserves leaf count and only grows binary copy counts") {
  CopyCounter dp;
  for (std::size_t n : {1, 3, 5, 7}) {
    for (const Tree& t : all_trees({3, n, true})) {
      const Tree image = g_map(t, 3);
      CHECK(image.leaf_count() == t.leaf_count());
      CHECK(valid_for(image, 2));
      for (std::size_t k = 2; k <= 5 && k <= n; ++k)
        for (const Tree& pattern : all_trees({2, k, false}))
          CHECK(dp.copies(pattern, image) >= dp.copies(pattern, t));
    }
  }
  // the worked 3-leaf case: C_3 holds no copy of F^2_3, its image holds one
  CHECK(count_copies(parse("(*,(*,*))"), build_star(3)).copies == 0);
  CHECK(count_copies(parse("(*,(*,*))"), g_map(build_star(3), 3)).copies == 1);
}

TEST_CASE("compose") {
  CHECK(serialize(compose(parse("(*,*)"), parse("(*,*)"))) ==
        "((*,*),(*,*))");
  CHECK(compose(build_star(3), build_star(3)) == build_complete(3, 2));

  // identity laws hold exactly
  const Tree t = parse("((*,*),*,(*,(*,*)))");
  CHECK(compose(t, Tree::leaf()) == t);
  CHECK(compose(Tree::leaf(), t) == t);

  for (const Tree& a : all_trees({3, 3, false}))
    for (const Tree& b : all_trees({3, 4, false}))
      CHECK(compose(a, b).leaf_count() == a.leaf_count() * b.leaf_count());
}

TEST_CASE("compose count inequality") {
  // c(F(S1;S2), F(S1;T)) >= c(S2,T)^{|S1|}
  CopyCounter dp;
  for (std::size_t s1n = 2; s1n <= 3; ++s1n) {
    for (const Tree& s1 : all_trees({3, s1n, false})) {
      for (std::size_t s2n = 2; s2n <= 3; ++s2n) {
        for (const Tree& s2 : all_trees({3, s2n, false})) {
          for (std::size_t tn = 2; tn <= 5; ++tn) {
            for (const Tree& t : all_trees({3, tn, false})) {
              const BigInt lhs = dp.copies(compose(s1, s2), compose(s1, t));
              const BigInt rhs =
                  int_pow(dp.copies(s2, t), static_cast<std::uint64_t>(s1n));
              CHECK(lhs >= rhs);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("iterate_compose") {
  const Tree c3 = build_star(3);
  CHECK(iterate_compose(c3, 1).is_leaf());
  CHECK(iterate_compose(c3, 2) == c3);
  CHECK(iterate_compose(c3, 3) == build_complete(3, 2));
  CHECK(iterate_compose(c3, 5).leaf_count() == 81);
  CHECK(iterate_compose(parse("(*,(*,*))"), 4).leaf_count() == 27);

  CHECK_THROWS_AS(iterate_compose(c3, 0), DomainError);
  CHECK_THROWS_AS(iterate_compose(c3, 20, 1000), BudgetError);
}

TEST_CASE("iteration recurrence for copy counts") {
  // c(D, T^[n+1]) >= |D| c(D, T^[n]) + |T^[n]|^{|D|}
  CopyCounter dp;
  for (const Tree& pattern : all_trees({3, 3, false})) {
    Tree prev = Tree::leaf();
    for (int step = 2; step <= 5; ++step) {
      const Tree next = compose(pattern, prev);
      const BigInt lhs = dp.copies(pattern, next);
      const BigInt rhs =
          pattern.leaf_count() * (prev.is_leaf() ? BigInt(0)
                                                 : dp.copies(pattern, prev)) +
          int_pow(BigInt(prev.leaf_count()),
                  static_cast<std::uint64_t>(pattern.leaf_count()));
      CHECK(lhs >= rhs);
      prev = next;
    }
  }
}

TEST_CASE("t_star worked examples") {
  {
    const ConstructionTrace trace = t_star(build_complete(2, 2), 2, 16);
    CHECK(trace.m == 4);
    CHECK(trace.added_leaves == 0);
    CHECK(trace.s.leaf_count() == 3);
    CHECK(trace.t_double_prime.leaf_count() == 12);
    CHECK(trace.s_p.leaf_count() == 5);
    CHECK(trace.result.leaf_count() == 16);
    CHECK(strict_for(trace.result, 2));
  }
  {
    const ConstructionTrace trace = t_star(build_star(3), 3, 13);
    CHECK(trace.m == 3);
    CHECK(trace.s.is_leaf());
    CHECK(trace.t_double_prime.leaf_count() == 3);
    CHECK(trace.s_p.leaf_count() == 11);
    CHECK(trace.result.leaf_count() == 13);
    CHECK(strict_for(trace.result, 3));
  }
}

TEST_CASE("t_star validates its preconditions") {
  CHECK_THROWS_AS(t_star(build_star(3), 3, 12), DomainError);  // 12 != 1 mod 2
  CHECK_THROWS_AS(t_star(build_star(3), 2, 16), DomainError);  // wrong size
  CHECK_THROWS_AS(t_star(parse("(*,*,*,*)"), 3, 17), DomainError);  // not 3-ary
  CHECK_THROWS_AS(t_star(build_star(3), 4, 13), DomainError);  // m < d
}

TEST_CASE("t_star size ledger holds on every valid input") {
  for (int d : {2, 3}) {
    for (std::size_t n : {13, 16, 25, 37}) {
      if ((n - 1) % static_cast<std::size_t>(d - 1) != 0) continue;
      std::size_t root = 1;
      while ((root + 1) * (root + 1) <= n) ++root;
      for (const Tree& t : all_trees({d, root, false})) {
        const ConstructionTrace trace = t_star(t, d, n);
        CHECK(trace.t_prime.leaf_count() ==
              t.leaf_count() + trace.added_leaves);
        CHECK(strict_for(trace.t_prime, d));
        CHECK(strict_for(trace.s, d));
        CHECK(strict_for(trace.t_double_prime, d));
        CHECK(strict_for(trace.s_p, d));
        CHECK(trace.t_double_prime.leaf_count() ==
              t.leaf_count() * trace.s.leaf_count() + trace.added_leaves);
        CHECK(trace.result.leaf_count() ==
              trace.t_double_prime.leaf_count() + trace.s_p.leaf_count() - 1);
        CHECK(trace.result.leaf_count() == n);
        CHECK(strict_for(trace.result, d));
      }
    }
  }
}
