#include <iostream>

#include "CLI11.hpp"
#include "unipot/catalog.hpp"

int main(int argc, char** argv) {
  CLI::App app{"unipot"};
  app.require_subcommand(0);
  CLI11_PARSE(app, argc, argv);
  std::cout << "unipot: no command given (placeholder)\n";
  return 0;
}
