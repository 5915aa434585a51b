#include "hexcover/cli.hpp"

#include <string>
#include <vector>

int main(int argc, char** argv) {
  return hexcover::run_cli(std::vector<std::string>(argv, argv + argc));
}
