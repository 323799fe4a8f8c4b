#pragma once

#include <stdexcept>
#include <string>

namespace dps {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonInvertible : public Error {
public:
    using Error::Error;
};

class BothZero : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class DecompositionFailed : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// Operation requested on a lattice of the wrong parity (odd vs even N).
class ParityError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DepthExceeded : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace dps
