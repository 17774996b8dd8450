#include <iostream>

#include "pbound/cli.hpp"

int main(int argc, char** argv) { return pbound::run_main(argc, argv, std::cout, std::cerr); }
