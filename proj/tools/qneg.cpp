#include "qneg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qneg::cli::run(argc, argv, std::cout, std::cerr); }
