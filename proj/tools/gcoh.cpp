#include <gcoh/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return gcoh::cli::main(argc, argv, std::cout, std::cerr); }
