#include <iostream>

#include "endtangle/report.hpp"

int main(int argc, char** argv) {
  return endtangle::run_cli(argc, argv, std::cout, std::cerr);
}
