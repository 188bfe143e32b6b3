#ifndef GPG_ERRORS_HPP
#define GPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpg {

/// Base class for every domain error raised by the library. Usage errors
/// (bad arguments) use the standard std::invalid_argument instead.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public MathError {
 public:
  using MathError::MathError;
};

/// Series division by a series whose constant term has no inverse.
class NonInvertibleConstantTerm : public MathError {
 public:
  using MathError::MathError;
};

class InnerConstantNotZero : public MathError {
 public:
  using MathError::MathError;
};

class IndexOutOfRange : public MathError {
 public:
  using MathError::MathError;
};

/// Evaluation of A_m(z)/(1-z)^{m+1} at z = 1.
class PoleAtOne : public MathError {
 public:
  using MathError::MathError;
};

class DegenerateBasis : public MathError {
 public:
  using MathError::MathError;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gpg

#endif  // GPG_ERRORS_HPP
