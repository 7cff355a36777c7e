#pragma once

#include <stdexcept>
#include <string>

namespace ics {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract data (bad dims, empty inputs, bad file contents).
class InvalidDataError : public Error {
public:
    using Error::Error;
};

/// Filesystem failures: unreadable input, unwritable output.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ics
