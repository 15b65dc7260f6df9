#include "acsp/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return acsp::runCli(argc, argv, std::cout); }
