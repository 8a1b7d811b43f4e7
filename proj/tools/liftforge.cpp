#include "liftforge/cli.hpp"

int main(int argc, char** argv) { return liftforge::run_cli(argc, argv); }
