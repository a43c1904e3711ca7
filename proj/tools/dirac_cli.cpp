#include <iostream>
#include <string>
#include <vector>

#include "dirac/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out;
  int code = dirac::execute(args, out);
  std::cout << out;
  return code;
}
