#include "partasym/sweep.hpp"

int main(int argc, char** argv) { return partasym::cli_main(argc, argv); }
