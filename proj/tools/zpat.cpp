#include <zpat/io/cli.hpp>

int main(int argc, char **argv) { return zpat::io::run(argc, argv); }
