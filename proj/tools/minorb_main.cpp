#include <minorb/cli.hpp>

int main(int argc, char** argv) { return minorb::cli::run(argc, argv); }
