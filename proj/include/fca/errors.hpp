#pragma once

#include <stdexcept>
#include <string>

namespace fca {

// Malformed or inconsistent input (files, names, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeds what the engine promises to handle, e.g. more attributes
// than AttrSet can hold or an exhaustive 2^|M| scan with |M| > 25.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fca
