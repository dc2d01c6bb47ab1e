#pragma once

#include <stdexcept>
#include <string>

namespace ghcs {

/// Argument lies outside (or too close to) the disc of convergence.
class OutOfRadius : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series hit its term cap before the stopping rule was met.
class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight density queried outside its support.
class OutOfSupport : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Moment errors failed to shrink when the node count was doubled.
class QuadratureUnderResolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ghcs
