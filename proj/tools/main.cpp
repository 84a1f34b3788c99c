#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv)
{
    std::string out;
    std::string err;
    const int code = c32::cli::run(argc, argv, out, err);
    std::cout << out;
    std::cerr << err;
    return code;
}
