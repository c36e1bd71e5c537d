#pragma once

#include <stdexcept>
#include <string>

namespace cyclovan {

/// An integer or polynomial division that must be exact left a remainder.
/// This always indicates an implementation bug, never bad user input.
struct ExactDivisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A floating-point oracle produced a value too far from an integer (or a
/// nonreal value) to round safely.
struct RoundoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact elimination hit a zero pivot / zero determinant on a matrix that
/// must be invertible.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An entry of n*G_n^-1 came out non-integral. This would falsify the
/// integrality theorem the library verifies, so it is never rounded away.
struct NonIntegralError : std::runtime_error {
  NonIntegralError(long modulus, long row, long col, std::string entry)
      : std::runtime_error("entry (" + std::to_string(row) + ", " +
                           std::to_string(col) + ") of n*G_n^-1 for n = " +
                           std::to_string(modulus) +
                           " is not an integer: " + entry),
        n(modulus),
        row(row),
        col(col),
        entry(std::move(entry)) {}

  long n;
  long row;
  long col;
  std::string entry;
};

}  // namespace cyclovan
