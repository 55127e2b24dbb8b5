#include <iostream>
#include <sstream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::ostringstream out, err;
  const int code = warpdeg::cli::run(args, out, err);
  std::cout << out.str() << std::flush;
  std::cerr << err.str() << std::flush;
  return code;
}
