#include "alphasym/cli.hpp"

int main(int argc, char **argv) { return alphasym::run(argc, argv); }
