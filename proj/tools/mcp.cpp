#include "mcp/cli.hpp"

int main(int argc, char** argv) { return mcp::cli::run(argc, argv); }
