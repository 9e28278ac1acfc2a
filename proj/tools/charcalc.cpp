#include <iostream>
#include <string>
#include <vector>

#include <charcalc/cli.hpp>

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return charcalc::run_command(args, std::cin, std::cout, std::cerr);
}
