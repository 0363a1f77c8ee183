#include "realforms/cli/app.hpp"

int main(int argc, char** argv) { return realforms::run_cli(argc, argv); }
