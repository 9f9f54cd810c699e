#pragma once

#include <stdexcept>
#include <string>

namespace trisphere {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Zero or otherwise unusable numeric input (zero vector, zero perimeter,
// negative side length).
struct DegenerateInput : Error {
  using Error::Error;
};

// Side lengths that violate the perimeter normalization or a triangle
// inequality beyond tolerance.
struct NotATriangle : Error {
  using Error::Error;
};

// Two great circles with parallel (or antiparallel) normals.
struct CoincidentCircles : Error {
  using Error::Error;
};

// Three great circles that do not bound a proper spherical triangle.
struct NoTriangle : Error {
  using Error::Error;
};

struct OutOfDomain : Error {
  using Error::Error;
};

struct SolverFailure : Error {
  using Error::Error;
};

struct CertificateFailure : Error {
  using Error::Error;
};

}  // namespace trisphere
