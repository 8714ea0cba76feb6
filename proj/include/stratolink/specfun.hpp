#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace stratolink {

// Thrown when an adaptive quadrature or series fails to reach its tolerance.
struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace specfun {

// log Gamma(z) on the whole complex plane minus the poles (Lanczos g=7 plus
// reflection; some branch of the logarithm, so only exp(sum of log_gamma)
// is meaningful across the cut).
std::complex<double> log_gamma(std::complex<double> z);

// log|Gamma(x)| with the sign of Gamma(x); sign = 0 at the poles.
struct SignedLogGamma {
  double log_abs;
  int sign;
};
SignedLogGamma log_gamma_signed(double x);

double gamma_fn(double x);

// (x)_j = x (x+1) ... (x+j-1), (x)_0 = 1
double pochhammer(double x, int j);

// Generalized binomial coefficient over a real upper index.
// Exactly 0 when alpha is a non-negative integer and rho > alpha.
double binomial_real(double alpha, int rho);

double bessel_i0(double x);

// x^p * Gamma(1-p, x) for p > 0, x > 0, evaluated without over/underflow
// (equals integral_x^inf (t/x)^-p e^-t dt).
double upper_gamma_power(double p, double x);

// Meijer G evaluated by quadrature along a vertical Mellin-Barnes contour
// placed between the two pole families. Supports parameter patterns with
// 2(m+n) > p+q (exponentially decaying integrand) and a real positive
// argument, which covers G^{1,0}_{0,1}, G^{2,1}_{2,3} and G^{2,beta}_{beta,2}.
struct MeijerGSpec {
  int m = 0;
  int n = 0;
  std::vector<double> a_params;  // size p
  std::vector<double> b_params;  // size q
  double argument = 0;           // > 0
};
double meijer_g(const MeijerGSpec& spec, double rel_tol = 1e-8);

}  // namespace specfun
}  // namespace stratolink
