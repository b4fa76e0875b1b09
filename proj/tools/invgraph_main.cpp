#include <iostream>

#include "invgraph/cli.hpp"

int main(int argc, char** argv) {
    return invgraph::cli::run(argc, argv, std::cout, std::cerr);
}
