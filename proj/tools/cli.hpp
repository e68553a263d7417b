// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_TOOLS_CLI_HPP
#define COMLIE_TOOLS_CLI_HPP

#include <ostream>

namespace comlie::cli {

/// Exit status: 0 success, 1 computation or usage error, 2 validation failure.
/// Errors are one line on `err`: "error: <code>: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comlie::cli

#endif  // COMLIE_TOOLS_CLI_HPP
