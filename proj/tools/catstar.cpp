#include <cstdio>
#include <string>
#include <vector>

#include "catstar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool json = false;
  std::vector<std::string> rest;
  for (const auto& a : args) {
    if (a == "--json")
      json = true;
    else
      rest.push_back(a);
  }
  auto result = catstar::cli::run(rest);
  std::fputs(json ? result.json.c_str() : result.human.c_str(), stdout);
  return result.exit_code;
}
