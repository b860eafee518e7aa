// Exact inducibility enclosures for every 4-leaf binary shape, from the
// largest universe that stays cheap to search exhaustively.

#include <cstdio>

#include "treedens/counting.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/extremal.hpp"

using namespace treedens;

int main() {
  CopyCounter dp;
  std::printf("%-16s  %14s  %14s\n", "pattern", "lower", "upper");
  for (const Tree& pattern : all_trees({2, 4, false})) {
    const InducibilityInterval iv = inducibility_interval(pattern, 2, 14, &dp);
    std::printf("%-16s  %14s  %14s\n", pattern.canonical_code().c_str(),
                to_fraction_string(iv.lower).c_str(),
                to_fraction_string(iv.upper).c_str());
  }
  return 0;
}
