#include <iostream>

#include "qmesh/cli.hpp"

int main(int argc, char** argv) { return qmesh::cli::run(argc, argv, std::cout, std::cerr); }
