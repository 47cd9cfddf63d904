#include "lipman/cli.hpp"

int main(int argc, char** argv) { return lipman::cli::run_main(argc, argv); }
