#include <iostream>

#include "coxlehmer/cli.hpp"

int main(int argc, char** argv) { return coxlehmer::run_cli(argc, argv, std::cout, std::cerr); }
