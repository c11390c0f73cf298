#include <iostream>

#include "bullfree_cli/cli.hpp"

int main(int argc, char** argv) { return bullfree::cli::run(argc, argv, std::cout, std::cerr); }
