// gf_main.cpp — command line entry point (subcommands wired up in cli.hpp)

#include "gadgetforge/cli/cli.hpp"

int main(int argc, char** argv) { return gadgetforge::cli::run(argc, argv); }
