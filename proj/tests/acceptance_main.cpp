#include <iostream>

#include "convrad/acceptance.hpp"

int main() { return convrad::acceptance_run_all(std::cout) ? 0 : 1; }
