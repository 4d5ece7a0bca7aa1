#include <iostream>

#include "fglops/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = fglops::cli::run(args);
    std::cout << result.out;
    for (const auto& d : result.diagnostics)
        std::cerr << d << '\n';
    return result.exit_code;
}
