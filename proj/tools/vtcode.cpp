#include "vtcodes/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char **argv) {
    return vtcodes::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
