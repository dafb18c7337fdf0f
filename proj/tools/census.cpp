#include "census_app.hpp"

#include <iostream>

int main(int argc, char** argv) { return kostant::cli::run(argc, argv, std::cout, std::cerr); }
