#pragma once

#include <stdexcept>
#include <string>

namespace xbinom {

// Base of every error raised by the library. kind() is the stable label
// the CLI reports as error_kind.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DomainError"; }
};

// Evaluation requested at (or within snap radius of) a gamma pole where no
// finite representation exists.
class PoleError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "PoleError"; }
};

// A finite result that does not fit in a double. Never used for the
// mathematical infinity at gamma poles.
class OverflowError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "OverflowError"; }
};

class NonConvergentRegionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "NonConvergentRegion"; }
};

// |x| = |y| for a negative power: neither expansion converges absolutely.
class BoundaryRegionError : public NonConvergentRegionError {
public:
    using NonConvergentRegionError::NonConvergentRegionError;
    const char* kind() const noexcept override { return "BoundaryRegion"; }
};

class ParseError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ParseError"; }
};

}  // namespace xbinom
