#pragma once

#include <stdexcept>

namespace horncone {

/* Raised when an exhaustive search or enumeration would exceed its configured
   budget; callers surface this distinctly from infeasibility. */
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace horncone
