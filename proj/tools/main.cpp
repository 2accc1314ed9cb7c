#include "pid2st/cli.hpp"

int main(int argc, char** argv) { return pid2st::run_cli(argc, argv); }
