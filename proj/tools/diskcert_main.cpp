#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "diskcert/cli.hpp"

int main(int argc, char** argv) {
  try {
    return diskcert::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "diskcert: " << e.what() << "\n";
    return diskcert::kExitMalformed;
  }
}
