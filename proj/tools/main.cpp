#include "qshock_cli.hpp"

int main(int argc, char** argv) { return qshock::cli::run_cli(argc, argv); }
