#include "lfac/cli.hpp"

int main(int argc, char** argv) { return lfac::cli::run(argc, argv); }
