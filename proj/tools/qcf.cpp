#include <iostream>

#include "qcf/cli.hpp"

int main(int argc, char** argv) { return qcf::run_cli(argc, argv, std::cout, std::cerr); }
