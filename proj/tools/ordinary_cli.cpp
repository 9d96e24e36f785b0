#include "cli.hpp"

int main(int argc, char** argv) { return ordinary::cli::run_cli(argc, argv); }
