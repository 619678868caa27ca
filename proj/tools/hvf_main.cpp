#include <iostream>

#include "hvf/cli.hpp"

int main(int argc, char **argv)
{
    return hvf::cli::run(argc, argv, std::cout, std::cerr);
}
