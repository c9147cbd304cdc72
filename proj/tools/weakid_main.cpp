#include <iostream>

#include "weakid/cli.hpp"

int main(int argc, char** argv) { return weakid::runCli(argc, argv, std::cout, std::cerr); }
