#pragma once

#include <stdexcept>
#include <string>

namespace tsl {

// Budget exceeded: divisor explosion, big-integer cap, table cap.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Caller broke a documented precondition (also used for configuration errors).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tsl
