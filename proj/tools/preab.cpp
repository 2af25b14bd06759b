#include "preab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return preab::run_cli(argc, argv, std::cout, std::cerr);
}
