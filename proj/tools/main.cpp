#include "pairable/cli.hpp"

int main(int argc, char** argv) { return pairable::cli::run(argc, argv); }
