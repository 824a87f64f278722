#include <iostream>

#include "emshift/cli.hpp"

int main(int argc, char** argv) { return emshift::cli::run(argc, argv, std::cout, std::cerr); }
