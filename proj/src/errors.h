#pragma once

#include <stdexcept>

namespace zerocross {

// An algorithm exhausted its budget without meeting its accuracy contract.
// The message carries the achieved estimate so callers can report it.
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}
