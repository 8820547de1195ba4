#include <hyperend/cli/cli.hpp>

int main(int argc, char** argv) { return hyperend::cli_dispatch(argc, argv); }
