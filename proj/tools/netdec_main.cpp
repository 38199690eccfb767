#include <iostream>

#include "netdec/cli.hpp"

int main(int argc, char** argv) {
  return netdec::run_cli(argc, argv, std::cout, std::cerr);
}
