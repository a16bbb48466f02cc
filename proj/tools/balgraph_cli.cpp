#include <iostream>

#include "balgraph/cli.hpp"

int main(int argc, char** argv) {
    return balgraph::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
