#include <iostream>

#include "solenoid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = solenoid::run_command(args);
  if (!res.text.empty())
    std::cout << res.text;
  else
    std::cout << res.document.dump(2) << "\n";
  return res.exit_code;
}
