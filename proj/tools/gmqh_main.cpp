#include <iostream>

#include "gmqh/cli/certificate.hpp"

int main(int argc, char** argv) { return gmqh::cli::run(argc, argv, std::cout, std::cerr); }
