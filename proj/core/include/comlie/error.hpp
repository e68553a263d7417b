// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_ERROR_HPP
#define COMLIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace comlie {

/// Whether an error means the input was rejected or a computation could not finish.
enum class ErrorKind { validation, computation };

/// Library-wide exception. `code()` is a short kebab-case token
/// ("field-mismatch", "cap-exceeded", ...) that front ends print verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        ErrorKind kind = ErrorKind::validation);

  const std::string& code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string code_;
  ErrorKind kind_;
};

}  // namespace comlie

#endif  // COMLIE_ERROR_HPP
