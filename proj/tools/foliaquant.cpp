#include <iostream>

#include "foliaquant/cli.hpp"

int main(int argc, char** argv) { return fq::run_cli(argc, argv, std::cout, std::cerr); }
