#pragma once

#include <stdexcept>

namespace catfam {

// A brute-force job was asked for a generation above the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An orbit walk ran out of its step budget before revisiting a sequence.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catfam
