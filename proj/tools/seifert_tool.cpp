#include <iostream>

#include "seifert/cli.hpp"

int main(int argc, char** argv) {
  return seifert::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
