#include "srs/cli.hpp"

int main(int argc, char** argv) { return srs::cli::run(argc, argv); }
