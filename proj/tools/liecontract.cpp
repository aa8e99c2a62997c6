#include "liecontract/cli.hpp"

int main(int argc, char** argv) { return liecontract::run_cli(argc, argv); }
