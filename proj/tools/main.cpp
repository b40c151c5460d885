#include "cli.hpp"

int main(int argc, char** argv) { return sqw::cli::main_entry(argc, argv); }
