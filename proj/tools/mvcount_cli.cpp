#include "mvcount/cli.hpp"

int main(int argc, char** argv) { return mvcount::cli::run(argc, argv); }
