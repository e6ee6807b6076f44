#include "bsk/cli.hpp"

int main(int argc, char** argv) { return bsk::run_cli(argc, argv); }
