#pragma once

#include <stdexcept>
#include <string>

namespace etm {

// Single error type for the whole library. Messages carry file/line
// context where a specific input location is to blame.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace etm
