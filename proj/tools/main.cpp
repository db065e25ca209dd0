#include "cli.hpp"

#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::ostringstream out;
    const int code = trirec::cli::run(args, out, std::cerr);
    std::cout << out.str() << std::flush;
    return code;
}
