#pragma once

#include <stdexcept>
#include <string>

namespace cliquecover {

// Raised for caller mistakes: bad indices, violated preconditions, malformed files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotPrimeError : public InputError {
public:
    using InputError::InputError;
};

// A search or enumeration guard refused the instance.
class InstanceTooLarge : public InputError {
public:
    using InputError::InputError;
};

} // namespace cliquecover
