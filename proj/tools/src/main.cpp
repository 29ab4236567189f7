#include "commands.hpp"

int main(int argc, char** argv) { return qtide::cli::run(argc, argv); }
