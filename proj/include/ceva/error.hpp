#pragma once

#include <stdexcept>
#include <string>

namespace ceva {

/// Raised when a caller violates a documented precondition of a module.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ceva
