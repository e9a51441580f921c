#include "polyhodge/cli.hpp"

int main(int argc, char** argv) { return polyhodge::cli_main(argc, argv); }
