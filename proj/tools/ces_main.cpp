#include "ces/cli.hpp"

int main(int argc, char** argv) { return ces::cli_main(argc, argv); }
