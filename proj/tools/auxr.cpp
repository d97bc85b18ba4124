#include <string>
#include <vector>

#include "auxr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return auxr::cli::run(args);
}
