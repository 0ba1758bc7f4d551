#pragma once

#include <stdexcept>
#include <string>

namespace bollobas {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed family, out-of-range parameter, or an operation applied to an
// input of the wrong shape (d, number of blocks).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An enumeration or search would exceed its configured size limit. Nothing is
// truncated: the caller gets this instead of a partial result.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A theorem was requested on a family outside the theorem's class hypothesis.
class HypothesisFailed : public Error {
public:
    using Error::Error;
};

// A result that the library verifies before returning failed its check.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace bollobas
