#pragma once

#include <stdexcept>

namespace qeg {

// Invalid caller input: bad parameters, malformed generator specs, bad ranges.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed edge-list text.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

// Operation needs a connected graph (graph distance is undefined otherwise).
class DisconnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative routine failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qeg
