#include "sic/cli.hpp"

int main(int argc, char** argv) { return sic::run_cli(argc, argv); }
