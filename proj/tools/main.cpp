#include "usn/cli.hpp"

int main(int argc, char** argv) { return usn::run_cli(argc, argv); }
