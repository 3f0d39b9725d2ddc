#include "cli.hpp"

int main(int argc, char** argv) { return heavypath::cli::run(argc, argv, std::cout, std::cerr); }
