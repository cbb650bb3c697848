#include "upbkit/cli.hpp"

int main(int argc, char** argv) { return upbkit::run_cli(argc, argv); }
