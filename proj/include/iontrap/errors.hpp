#pragma once

#include <stdexcept>
#include <string>

namespace iontrap {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or unparseable input file / schema mismatch.
struct ConfigError : Error {
    using Error::Error;
};

// A domain invariant or operation precondition was violated.
// Messages name the offending field and the violated invariant.
struct ValidationError : Error {
    using Error::Error;
};

// A computation produced non-finite or otherwise unusable values.
struct NumericalError : Error {
    using Error::Error;
};

// Filesystem / stream failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace iontrap
