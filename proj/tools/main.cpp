#include <iostream>
#include <string>
#include <vector>

#include "transverse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const transverse::Report report = transverse::run_cli(args);
  std::cout << report.body.dump(2) << '\n';
  if (report.exit_code == transverse::kExitInput || report.exit_code == transverse::kExitGenericity) {
    std::cerr << "transverse: " << report.body["results"].value("error", std::string("error")) << '\n';
  }
  return report.exit_code;
}
