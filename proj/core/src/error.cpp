// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/error.hpp"

#include <utility>

namespace comlie {

Error::Error(std::string code, const std::string& message, ErrorKind kind)
    : std::runtime_error(code + ": " + message), code_(std::move(code)), kind_(kind) {}

}  // namespace comlie
