#include "so5/cli.hpp"

int main(int argc, char** argv) { return so5::cli::run(argc, argv); }
