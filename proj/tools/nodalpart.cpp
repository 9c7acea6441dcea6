#include "nodalpart/cli.hpp"

int main(int argc, char** argv) { return nodalpart::cli::run(argc, argv); }
