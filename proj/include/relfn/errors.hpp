#pragma once

#include <stdexcept>
#include <string>

namespace relfn {

// Argument or parameter outside the mathematical domain of an operation.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to converge or left its validity region.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. `line` is 1-based, 0 when not line-specific.
struct io_error : std::runtime_error {
  io_error(const std::string& what, int line_ = 0)
      : std::runtime_error(what), line(line_) {}
  int line;
};

// Request exceeds a hard enumeration/size budget.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace relfn
