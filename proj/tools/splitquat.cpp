#include <iostream>

#include "splitquat/cli/app.hpp"

int main(int argc, char** argv) { return splitquat::cli::run(argc, argv, std::cout, std::cerr); }
