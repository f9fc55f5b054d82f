#include "convrad/commands.hpp"

int main(int argc, char** argv) { return convrad::run_cli(argc, argv); }
