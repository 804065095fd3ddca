#include <dicirc/cli.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
    return dicirc::cli::main_entry(argc, argv, std::cout, std::cerr);
}
