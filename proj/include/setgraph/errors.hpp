#pragma once

#include <stdexcept>
#include <string>

namespace setgraph {

/// Raised when an exact search exceeds its configured node or item budget.
/// The caller should retry with a larger budget; no partial answer is implied.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed graph6 text.
class Graph6Error : public std::invalid_argument {
 public:
  explicit Graph6Error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace setgraph
