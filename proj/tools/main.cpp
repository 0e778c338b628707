#include "fitefrac/cli.hpp"

int main(int argc, char** argv) { return fitefrac::cli::run(argc, argv); }
