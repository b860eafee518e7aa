#include <iostream>
#include <string>
#include <vector>

#include "treedens/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return treedens::run(args, std::cout, std::cerr);
}
