#pragma once

#include <stdexcept>
#include <string>

namespace sharpflat {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation refused to run because its discretization cannot deliver
/// the advertised accuracy. The CLI maps this family to exit status 3.
class NumericalRejection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sampling grid too coarse for the frequencies present in the data.
class AliasingError : public NumericalRejection {
 public:
  using NumericalRejection::NumericalRejection;
};

/// Quadrature order or resolution too low for the integrand.
class ResolutionError : public NumericalRejection {
 public:
  using NumericalRejection::NumericalRejection;
};

}  // namespace sharpflat
