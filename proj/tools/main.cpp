#include "bigindec/cli.hpp"

int main(int argc, char** argv) { return bigindec::run_cli(argc, argv); }
