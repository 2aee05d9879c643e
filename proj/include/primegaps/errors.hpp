#pragma once

#include <stdexcept>

namespace primegaps {

// An argument violated an operation's documented preconditions.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A request exceeded a configured size or time budget.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace primegaps
