#include "stratolink/specfun.hpp"

#include <algorithm>
#include <cmath>

#include "stratolink/quadrature.hpp"

namespace stratolink::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Lanczos g = 7, 9 coefficients; relative error ~1e-13 for Re(z) >= 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

using cplx = std::complex<double>;

// log(sin(w)) stable for large |Im(w)| (arbitrary branch).
cplx log_sin(cplx w) {
  if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
  if (w.imag() > 0) {
    // sin w = e^{-iw} (1 - e^{2iw}) * i/2
    cplx iw(-w.imag(), w.real());
    return -iw + std::log(-std::expm1(2.0 * iw)) + cplx(-std::log(2.0), kPi / 2);
  }
  return std::conj(log_sin(std::conj(w)));
}

cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + double(k));
  cplx t = z + 7.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin(kPi * z) - log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

SignedLogGamma log_gamma_signed(double x) {
  if (x > 0) return {lanczos_log_gamma(cplx(x, 0)).real(), 1};
  if (x == std::floor(x))
    return {std::numeric_limits<double>::infinity(), 0};  // pole
  double s = std::sin(kPi * x);
  double log_abs = std::log(kPi) - std::log(std::abs(s)) -
                   lanczos_log_gamma(cplx(1.0 - x, 0)).real();
  return {log_abs, s > 0 ? 1 : -1};
}

double gamma_fn(double x) {
  auto [log_abs, sign] = log_gamma_signed(x);
  if (sign == 0) return std::numeric_limits<double>::infinity();
  return sign * std::exp(log_abs);
}

double pochhammer(double x, int j) {
  if (j < 0) throw std::invalid_argument("pochhammer: j must be >= 0");
  double p = 1.0;
  for (int t = 0; t < j; ++t) p *= x + t;
  return p;
}

double binomial_real(double alpha, int rho) {
  if (rho < 0) throw std::invalid_argument("binomial_real: rho must be >= 0");
  if (rho == 0) return 1.0;
  double r = std::round(alpha);
  bool integral_alpha = r >= 0 && std::abs(alpha - r) < 1e-12;
  if (integral_alpha && rho > r + 0.5) return 0.0;  // Gamma(alpha-rho+1) pole
  double p = 1.0;
  for (int j = 1; j <= rho; ++j) p *= (alpha - rho + j) / j;
  return p;
}

double bessel_i0(double x) { return std::cyl_bessel_i(0.0, std::abs(x)); }

double upper_gamma_power(double p, double x) {
  if (!(p > 0) || !(x > 0))
    throw std::invalid_argument("upper_gamma_power: requires p > 0, x > 0");
  if (x > 745.0) return 0.0;  // e^{-x} underflows
  double a = 1.0 - p;
  if (x >= 1.0) {
    // Legendre continued fraction for Gamma(a,x), modified Lentz.
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double f = b != 0 ? b : tiny;
    double C = f, D = 0.0;
    for (int k = 1; k < 20000; ++k) {
      double ak = -double(k) * (double(k) - a);
      double bk = x + 2.0 * k + 1.0 - a;
      D = bk + ak * D;
      if (D == 0) D = tiny;
      C = bk + ak / C;
      if (C == 0) C = tiny;
      D = 1.0 / D;
      double delta = C * D;
      f *= delta;
      if (std::abs(delta - 1.0) < 1e-15) return x * std::exp(-x) / f;
    }
    throw NonConvergence("upper_gamma_power: continued fraction stalled");
  }
  // Small x: x^p Gamma(1-p,x) = x e^{-x} int_0^inf e^{-x(e^v - 1)} e^{(1-p)v} dv,
  // with y = (p-1) v when the exponential factor sets the scale.
  if (p > 2.0) {
    double scale = p - 1.0;
    double y_max = std::min(745.0, scale * std::log1p(745.0 / x));
    auto f = [&](double y) {
      return std::exp(-x * std::expm1(y / scale) - y);
    };
    return x * std::exp(-x) * quad::integrate(f, 0.0, y_max, 1e-12) / scale;
  }
  double v_max = std::log1p(745.0 / x);
  auto f = [&](double v) { return std::exp(-x * std::expm1(v) + (1.0 - p) * v); };
  return x * std::exp(-x) * quad::integrate(f, 0.0, v_max, 1e-12);
}

double meijer_g(const MeijerGSpec& spec, double rel_tol) {
  const int m = spec.m, n = spec.n;
  const int p = int(spec.a_params.size()), q = int(spec.b_params.size());
  const double z = spec.argument;
  if (m < 0 || n < 0 || m > q || n > p)
    throw std::invalid_argument("meijer_g: requires m <= q and n <= p");
  if (!(z > 0)) throw std::invalid_argument("meijer_g: argument must be positive");

  // G^{1,0}_{0,1}(z | -; b) = z^b e^{-z}
  if (m == 1 && n == 0 && p == 0 && q == 1)
    return std::pow(z, spec.b_params[0]) * std::exp(-z);

  const int delta = 2 * (m + n) - p - q;
  if (delta <= 0)
    throw std::invalid_argument("meijer_g: unsupported parameter pattern (no contour decay)");

  // Contour Re(s) = c with poles of Gamma(b_j - s), j < m to the right and
  // poles of Gamma(1 - a_k + s), k < n to the left.
  std::vector<double> b = spec.b_params;
  double lo = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) lo = std::max(lo, spec.a_params[k] - 1.0);
  auto window_hi = [&] {
    double hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) hi = std::min(hi, b[j]);
    return hi;
  };
  double hi = window_hi();
  if (!(hi - lo > 1e-9)) {
    // degenerate window: widen by a small parameter shift
    for (int j = 0; j < m; ++j) b[j] += 1e-6 * (j + 1);
    hi = window_hi();
    if (!(hi - lo > 1e-9))
      throw std::invalid_argument("meijer_g: pole families cannot be separated");
  }
  double c = std::isfinite(lo) ? 0.5 * (lo + hi) : hi - 0.5;

  const double log_z = std::log(z);
  auto chi = [&](double t) {
    std::complex<double> s(c, t);
    std::complex<double> acc = s * log_z;
    for (int j = 0; j < m; ++j) acc += log_gamma(b[j] - s);
    for (int k = 0; k < n; ++k) acc += log_gamma(1.0 - spec.a_params[k] + s);
    for (int j = m; j < q; ++j) acc -= log_gamma(1.0 - b[j] + s);
    for (int k = n; k < p; ++k) acc -= log_gamma(spec.a_params[k] - s);
    return std::exp(acc).real();
  };

  // |integrand| ~ t^nu exp(-pi delta t / 2); truncate where it is dead.
  double kappa = 0.5 * kPi * delta;
  double t_max = std::clamp(130.0 / kappa, 40.0, 250.0);
  double raw = quad::integrate(chi, 0.0, t_max, rel_tol);
  return raw / kPi;
}

}  // namespace stratolink::specfun
