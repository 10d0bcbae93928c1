#include "hqmm/cli.hpp"

int main(int argc, char** argv) { return hqmm::cli::run(argc, argv); }
