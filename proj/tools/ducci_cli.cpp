#include <iostream>
#include <string>
#include <vector>

#include "ducci/cli.hpp"

int main(int argc, char** argv) {
    return ducci::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
