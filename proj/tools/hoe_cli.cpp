#include "hoe/cli.hpp"

int main(int argc, char** argv) { return hoe::cli::run(argc, argv, std::cout, std::cerr); }
