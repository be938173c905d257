#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return lin3::cli::run(argc, argv, std::cout, std::cerr); }
