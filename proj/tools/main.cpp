#include "bundles/cli.hpp"

int main(int argc, char** argv) { return bundles::run_cli(argc, argv); }
