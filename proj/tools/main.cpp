#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return steiner4::cli::run(argc, argv, std::cout, std::cerr); }
