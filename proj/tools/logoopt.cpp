#include <iostream>

#include "logo/cli.hpp"

int main(int argc, char** argv) { return logo::cli::run(argc, argv, std::cout, std::cerr); }
