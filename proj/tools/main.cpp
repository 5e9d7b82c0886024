#include <iostream>

#include "focal_cli.hpp"

int main(int argc, char** argv) { return focal::cli::run(argc, argv, std::cout, std::cerr); }
