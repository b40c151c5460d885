#pragma once

#include <stdexcept>
#include <string>

namespace sqw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vertex sequence with repeated vertices was given where a simplex is required.
class DegenerateSimplex : public Error {
public:
    using Error::Error;
};

/// Self-loop or non-positive vertex id in an edge list.
class InvalidEdge : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The simplex is not a member of the complex at the requested dimension.
class UnknownSimplex : public Error {
public:
    using Error::Error;
};

/// The simplex has no lower neighbours, so the walk has no basis states for it.
class IsolatedSimplex : public Error {
public:
    using Error::Error;
};

/// m_n = 0: modularity is undefined.
class NoAdjacency : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

/// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (edge lists, partition files).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace sqw
