#ifndef POLYLOC_ERROR_HPP
#define POLYLOC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polyloc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Family parameters (alpha, beta) outside their admissible range, or other
/// invalid scalar arguments.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A band [m, n] with m > n.
class BandError : public Error {
public:
  using Error::Error;
};

/// Odd band limits handed to the Hermite solvers.
class ParityError : public Error {
public:
  using Error::Error;
};

/// Input lies in an excluded set of a formula (e.g. a vanishing denominator).
class DomainError : public Error {
public:
  using Error::Error;
};

/// An iteration failed to converge or a runtime consistency check failed.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Sampling too coarse for the filter degree (N <= 2n).
class SamplingError : public Error {
public:
  using Error::Error;
};

/// File or stream I/O, including malformed input files.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace polyloc

#endif // POLYLOC_ERROR_HPP
