#include <iostream>

#include "reslat/cli_app.hpp"

int main(int argc, char** argv) {
  return reslat::run_cli(argc, argv, std::cout, std::cerr);
}
