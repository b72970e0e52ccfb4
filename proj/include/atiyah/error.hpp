#pragma once

#include <stdexcept>
#include <string>

namespace atiyah {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// incompatible base rings / truncations / chart dimensions
struct MismatchError : Error {
    using Error::Error;
};

// malformed user input (documents, bundle expressions, CLI parameters)
struct InputError : Error {
    using Error::Error;
};

// combinatorial blowup guard tripped
struct GuardError : Error {
    using Error::Error;
};

// Newton path asked to divide by k with k >= p in characteristic p
struct DivisionObstructionError : Error {
    using Error::Error;
};

}  // namespace atiyah
