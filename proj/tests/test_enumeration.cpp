#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/tree.hpp"

using namespace treedens;

TEST_CASE("binary universes follow the Wedderburn-Etherington numbers") {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6,
                                             11, 23, 46, 98, 207, 451};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    CHECK(all_trees({2, n, false}).size() == expected[n - 1]);
    CHECK(count_trees({2, n, false}) == expected[n - 1]);
  }
}

TEST_CASE("small universes are the expected code lists") {
  const auto ternary3 = all_trees({3, 3, false});
  REQUIRE(ternary3.size() == 2);
  CHECK(ternary3[0].canonical_code() == "(*,(*,*))");
  CHECK(ternary3[1].canonical_code() == "(*,*,*)");

  const auto strict7 = all_trees({3, 7, true});
  REQUIRE(strict7.size() == 2);
  CHECK(strict7[0].canonical_code() == "(*,(*,*,*),(*,*,*))");
  CHECK(strict7[1].canonical_code() == "(*,*,(*,*,(*,*,*)))");

  const auto single = all_trees({2, 1, false});
  REQUIRE(single.size() == 1);
  CHECK(single[0].is_leaf());
}

TEST_CASE("streams are sorted, duplicate-free and valid") {
  for (int d : {2, 3, 4}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (bool strict : {false, true}) {
        TreeStream stream({d, n, strict});
        std::string last;
        std::size_t count = 0;
        while (auto t = stream.next()) {
          ++count;
          CHECK(t->canonical_code() > last);  // strictly ascending
          last = t->canonical_code();
          CHECK(t->leaf_count() == n);
          CHECK(valid_for(*t, d));
          if (strict) CHECK(strict_for(*t, d));
          CHECK(serialize(*t) == t->canonical_code());  // canonical form
        }
        CHECK(count_trees({d, n, strict}) == count);
      }
    }
  }
}

TEST_CASE("streams match the generate-and-dedupe oracle") {
  for (int d : {2, 3}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (bool strict : {false, true}) {
        const auto& expected = oracles::naive_universe(d, n, strict);
        const auto got = all_trees({d, n, strict});
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i)
          CHECK(got[i].canonical_code() == expected[i].canonical_code());
      }
    }
  }
}

TEST_CASE("strict universes with infeasible sizes are empty") {
  CHECK(all_trees({3, 4, true}).empty());
  CHECK(count_trees({3, 4, true}) == 0);
  CHECK(count_trees({4, 9, true}) == 0);
  CHECK(count_trees({3, 9, true}) == 4);
  CHECK(all_trees({3, 9, true}).size() == 4);
}

TEST_CASE("count_trees matches stream lengths into the teens") {
  for (int d : {2, 3, 4}) {
    for (std::size_t n = 8; n <= 12; ++n) {
      for (bool strict : {false, true}) {
        std::size_t len = 0;
        TreeStream stream({d, n, strict});
        while (stream.next()) ++len;
        CHECK(count_trees({d, n, strict}) == len);
      }
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(count_trees({1, 3, false}), DomainError);
  CHECK_THROWS_AS(all_trees({2, 0, false}), DomainError);
}

TEST_CASE("count cache files round-trip") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("treedens-test-" + std::to_string(std::rand()));
  const EnumerationSpec spec{2, 10, false};
  CHECK(!load_cached_count(dir, spec).has_value());
  CHECK(count_trees_cached(spec, dir) == 98);
  const auto hit = load_cached_count(dir, spec);
  REQUIRE(hit.has_value());
  CHECK(*hit == 98);
  // a different spec must not collide
  CHECK(!load_cached_count(dir, {2, 11, false}).has_value());
  CHECK(count_trees_cached({2, 11, false}, dir) == 207);
  std::filesystem::remove_all(dir);
}
