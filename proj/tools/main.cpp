#include "borwein/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return borwein::cli::run(argc, argv, std::cout, std::cerr); }
