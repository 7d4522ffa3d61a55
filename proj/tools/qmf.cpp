#include <iostream>

#include "qmf/cli.hpp"

int main(int argc, char** argv) { return qmf::dispatch(argc, argv, std::cout, std::cerr); }
