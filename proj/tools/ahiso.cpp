#include <string>
#include <vector>

#include "ahiso/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ahiso::cli::run(args);
}
