// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "lisscheb_cli/cli.hpp"

int main(int argc, char** argv) { return lisscheb::cli::run(argc, argv, std::cout, std::cerr); }
