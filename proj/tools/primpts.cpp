#include "primpts/cli/run.hpp"

int main(int argc, char** argv)
{
    return primpts::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
