#include "nilflow/cli.hpp"

int main(int argc, char** argv) { return nilflow::cli_main(argc, argv); }
