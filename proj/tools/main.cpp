#include <iostream>
#include <string>
#include <vector>

#include "trinodiv/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = trinodiv::cli::run(args);
  const std::string out = trinodiv::cli::render(result);
  if (!result.ok && result.format == trinodiv::cli::OutputFormat::kText) {
    std::cerr << out << '\n';
  } else {
    if (!out.empty()) std::cout << out << '\n';
  }
  return result.exit_code;
}
