#include "tenfold_cli.hpp"

int main(int argc, char** argv) { return tenfold::cli::run_main(argc, argv); }
