#include <string>
#include <vector>

#include "torrec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return torrec::run_cli(args);
}
