#include "jp/cli.hpp"

int main(int argc, char** argv) { return jp::run_cli(argc, argv); }
