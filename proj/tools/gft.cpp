#include <gft/cli.hpp>

int main(int argc, char** argv)
{
    return gft::cli::run(argc, argv);
}
