#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace glassnet {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Raised when a caller violates an operation's precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

/// Fixed-point text with `digits` decimals; values that round to zero print unsigned.
std::string format_fixed(double value, int digits = 10);

/// Comma-separated list of numbers, e.g. "0.1,-0.2".
std::string format_vector(const Vector& v, const char* separator = ",");

}  // namespace glassnet
