#pragma once

namespace alphasym
{

/// Command-line entry point. Exit 0 on success, 1 when a checked invariant or
/// inequality fails, 2 on input errors (unknown subcommand, malformed config,
/// unresolved catalog name).
int run(int argc, char **argv);

} // namespace alphasym
