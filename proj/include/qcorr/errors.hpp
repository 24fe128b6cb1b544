#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// A state parameter or argument lies outside its admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix or subsystem dimensions are inconsistent.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is only defined for particular local dimensions.
class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The marginal spectrum does not have the degeneracy pattern the operation needs.
class DegenerateMarginal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed state string such as "werner:m=4,z=0.3".
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcorr
