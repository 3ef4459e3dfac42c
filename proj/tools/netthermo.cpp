#include <iostream>

#include "netthermo/cli.hpp"

int main(int argc, char** argv) { return netthermo::cli::run(argc, argv, std::cout, std::cerr); }
