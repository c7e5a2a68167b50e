#include <iostream>

#include "qcdesign/cli/app.hpp"

int main(int argc, char** argv) {
  return qcd::cli::run(argc, argv, std::cout, std::cerr);
}
