#include <string>
#include <vector>

#include "approxdct/cli.hpp"

int main(int argc, char** argv) {
    return approxdct::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
