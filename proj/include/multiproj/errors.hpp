#pragma once

#include <stdexcept>
#include <string>

namespace multiproj {

/// Base class for every input-validation failure raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed token or line in a point-set file or a CLI list argument.
class SyntaxError : public Error {
public:
    using Error::Error;
};

/// A tuple has the wrong number of entries for its ambient space.
class ArityError : public Error {
public:
    using Error::Error;
};

/// A projective factor was given the all-zero coordinate vector.
class ZeroFactor : public Error {
public:
    using Error::Error;
};

/// Two input points canonicalize to the same point.
class DuplicatePoint : public Error {
public:
    using Error::Error;
};

/// A point-set file contains no points.
class EmptySet : public Error {
public:
    using Error::Error;
};

/// A fiber operation was requested on a single-factor space.
class NotAProduct : public Error {
public:
    using Error::Error;
};

/// A single-factor operation was requested on a product space.
class NotSingleFactor : public Error {
public:
    using Error::Error;
};

/// The point set does not live in the ambient space the operation requires.
class WrongAmbient : public Error {
public:
    using Error::Error;
};

/// Two partitions were expected to partition the same integer but do not.
class SumMismatch : public Error {
public:
    using Error::Error;
};

/// No (0,1)-matrix with the requested margins exists.
class Infeasible : public Error {
public:
    using Error::Error;
};

/// A margin vector has a zero entry where a positive one is required.
class ZeroMargin : public Error {
public:
    using Error::Error;
};

} // namespace multiproj
