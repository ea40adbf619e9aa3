#include "l2lab/cli.hpp"

int main(int argc, char** argv) { return l2lab::run_cli(argc, argv, std::cout, std::cerr); }
