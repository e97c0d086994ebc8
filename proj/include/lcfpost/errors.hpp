#pragma once

#include <stdexcept>
#include <string>

namespace lcfpost {

// Error categories map onto the CLI exit codes:
// validation -> 1, computation -> 2, I/O -> 3.

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcfpost
