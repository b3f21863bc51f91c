#pragma once

#include <stdexcept>

namespace cores {

// Bad API call or flag combination. The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input data (parse errors carry "line N: ..."
// in the message). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cores
