#include <iostream>

#include "centerpole/cli_commands.hpp"

int main(int argc, char** argv) { return centerpole::cli::run_cli(argc, argv, std::cout, std::cerr); }
