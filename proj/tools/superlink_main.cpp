#include <iostream>

#include "superlink/cli.hpp"

int main(int argc, char** argv) { return superlink::cli::run(argc, argv, std::cout, std::cerr); }
