#include <iostream>

#include "ternary/cli.hpp"

int main(int argc, char** argv) {
  return ternary::run_cli(argc, argv, std::cout, std::cerr, ternary::CliEnv::from_process());
}
