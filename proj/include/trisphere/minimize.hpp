#pragma once

// 1D bracketed minimization and root finding.

#include <cmath>
#include <utility>

#include "trisphere/errors.hpp"

namespace trisphere {

// Golden-section search for a minimum of f on [a, b]. Converges to an
// interior local minimum when one exists in the bracket, otherwise to the
// better endpoint.
template <typename F>
double golden_section_minimize(F&& f, double a, double b, double xtol) {
  constexpr double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Bisection on a bracketed sign change. Requires f(a) and f(b) of opposite
// sign; returns the midpoint of the final interval of width <= xtol.
template <typename F>
double bisect(F&& f, double a, double b, double xtol) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) throw SolverFailure("bisect: root not bracketed");
  while (b - a > xtol) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace trisphere
