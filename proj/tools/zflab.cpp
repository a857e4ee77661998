#include "zflab/cli.hpp"

int main(int argc, char** argv) { return zflab::cli::run(argc, argv); }
