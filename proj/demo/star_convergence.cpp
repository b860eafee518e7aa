// Watches the maximum density of the star C_3 over strictly ternary trees
// approach its inducibility 1/4 as the universes grow.

#include <cstdio>

#include "treedens/counting.hpp"
#include "treedens/extremal.hpp"

using namespace treedens;

int main() {
  const Tree star = build_star(3);
  const Rational limit = star_inducibility(3, 3);
  std::printf("i_3(C_3) = %s\n", to_fraction_string(limit).c_str());
  std::printf("%4s  %12s  %10s  %s\n", "n", "max density", "as float",
              "maximizers");
  CopyCounter dp;
  for (std::size_t n = 3; n <= 13; n += 2) {
    const MaxDensityResult r = max_density(star, {3, n, true}, &dp);
    std::printf("%4zu  %12s  %10.6f  %zu\n", n,
                to_fraction_string(r.max_density).c_str(),
                r.max_density.convert_to<double>(), r.maximizers.size());
  }
  return 0;
}
