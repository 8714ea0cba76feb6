#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "stratolink/specfun.hpp"

namespace stratolink::quad {

// Adaptive Gauss-Kronrod on [a, b].
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 int max_depth = 18) {
  double err = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, max_depth, rel_tol, &err);
  if (!std::isfinite(v)) throw NonConvergence("quadrature produced a non-finite value");
  if (err > 1e-6 * std::max(1.0, std::abs(v)))
    throw NonConvergence("quadrature failed to converge");
  return v;
}

// Integral over [a, inf) of an exponentially decaying integrand.
template <class F>
double integrate_exp_tail(F&& f, double a, double rel_tol = 1e-11) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0, l1 = 0;
  double v = integrator.integrate(f, a, std::numeric_limits<double>::infinity(),
                                  rel_tol, &err, &l1);
  if (!std::isfinite(v)) throw NonConvergence("quadrature produced a non-finite value");
  if (err > 1e-5 * std::max(1.0, l1))
    throw NonConvergence("tail quadrature failed to converge");
  return v;
}

}  // namespace stratolink::quad
