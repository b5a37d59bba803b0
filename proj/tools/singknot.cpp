#include "singknot/cli.hpp"

int main(int argc, char** argv) { return singknot::cli::run(argc, argv, std::cout, std::cerr); }
