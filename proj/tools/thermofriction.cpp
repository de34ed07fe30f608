#include "thermofriction/cli.hpp"

int main(int argc, char** argv) { return thermofriction::cli::run(argc, argv); }
