#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace warpdeg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input. Parse errors carry the 1-based
// column of the offending token when one is known.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message,
                      std::optional<std::size_t> column = std::nullopt)
      : Error(column ? message + " (column " + std::to_string(*column) + ")"
                     : message),
        column_(column) {}

  [[nodiscard]] std::optional<std::size_t> column() const { return column_; }

 private:
  std::optional<std::size_t> column_;
};

// The operation needs at least one crossing and got the empty word.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Data file missing or unreadable.
class IoError : public Error {
 public:
  using Error::Error;
};

// A proven identity failed on a computed value. Raised only when the
// implementation itself is wrong.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace warpdeg
