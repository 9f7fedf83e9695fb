#include "frontier/cli.hpp"

int main(int argc, char** argv) { return frontier::cli_main(argc, argv); }
