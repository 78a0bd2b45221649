#include "drsrd/cli.hpp"

int main(int argc, char** argv) {
    return drsrd::run_cli(argc, argv);
}
