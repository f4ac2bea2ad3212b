#include "cli.hpp"

int main(int argc, char** argv) { return cyltn::cli::run(argc, argv); }
