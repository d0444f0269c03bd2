#include "cliquecover/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cliquecover::cli_dispatch(args, std::cout, std::cerr);
}
