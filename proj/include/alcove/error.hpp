#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Violated precondition or invalid input (bad rank, unbounded polytope, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alcove
