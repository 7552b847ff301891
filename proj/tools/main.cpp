#include "hpjts/cli.hpp"

int main(int argc, char** argv) { return hpjts::run_cli(argc, argv); }
