#include "stratolink/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "stratolink/specfun.hpp"

namespace stratolink {

namespace {
constexpr double kPi = 3.14159265358979323846;

double clamp01(double x) { return x < 0 ? 0.0 : (x > 1 ? 1.0 : x); }

// sum_{j>=0} (-1)^j binom(alpha-1, j) (1+j)^{-s}, the EW moment kernel g_n
// with s = 1 + n/beta. Terms decay like j^{-alpha-s}.
double ew_moment_kernel(double alpha, double s) {
  double term = 1.0;  // (-1)^j binom(alpha-1, j) at j = 0
  double sum = 1.0;
  for (int j = 1; j < 200000; ++j) {
    term *= (j - alpha) / j;
    double add = term * std::pow(1.0 + j, -s);
    sum += add;
    if (std::abs(add) < 1e-14 * std::abs(sum) && j > 8) return sum;
  }
  return sum;
}
}  // namespace

ShadowedRicianChannel ShadowedRicianChannel::create(int m, double b,
                                                    double omega,
                                                    double avg_snr) {
  if (m < 1) throw std::invalid_argument("shadowed-Rician m must be a positive integer");
  if (!(b > 0) || omega < 0 || !(avg_snr > 0))
    throw std::invalid_argument("shadowed-Rician requires b > 0, omega >= 0, avg_snr > 0");
  ShadowedRicianChannel ch;
  ch.m = m;
  ch.b = b;
  ch.omega = omega;
  ch.avg_snr = avg_snr;
  double two_b = 2.0 * b;
  ch.vartheta = std::pow(two_b * m / (two_b * m + omega), m) / two_b;
  ch.varsigma = 1.0 / two_b;
  ch.delta = omega / (two_b * (two_b * m + omega));
  ch.psi = (ch.varsigma - ch.delta) / avg_snr;
  return ch;
}

ShadowedRicianChannel ShadowedRicianChannel::with_avg_snr(double s) const {
  return create(m, b, omega, s);
}

ShadowedRicianChannel sr_heavy(double g) { return ShadowedRicianChannel::create(1, 0.063, 8.94e-4, g); }
ShadowedRicianChannel sr_average(double g) { return ShadowedRicianChannel::create(10, 0.126, 0.835, g); }
ShadowedRicianChannel sr_light(double g) { return ShadowedRicianChannel::create(19, 0.158, 1.29, g); }

double sr_pdf(const ShadowedRicianChannel& ch, double gamma) {
  if (gamma < 0) return 0.0;
  double sum = 0.0;
  double fact = 1.0;  // j!
  for (int j = 0; j < ch.m; ++j) {
    if (j > 0) fact *= j;
    sum += ch.vartheta * specfun::pochhammer(1.0 - ch.m, j) *
           std::pow(-ch.delta, j) / (std::pow(ch.avg_snr, j + 1) * fact * fact) *
           std::pow(gamma, j);
  }
  return sum * std::exp(-ch.psi * gamma);
}

double sr_cdf(const ShadowedRicianChannel& ch, double gamma) {
  if (gamma <= 0) return 0.0;
  double sum = 0.0;
  double l_fact = 1.0;
  for (int l = 0; l < ch.m; ++l) {
    if (l > 0) l_fact *= l;
    double base = ch.vartheta * specfun::pochhammer(1.0 - ch.m, l) *
                  std::pow(-ch.delta, l) /
                  (std::pow(ch.avg_snr, l + 1) * l_fact);
    double q_fact = 1.0;
    for (int q = 0; q <= l; ++q) {
      if (q > 0) q_fact *= q;
      sum += base / (q_fact * std::pow(ch.psi, l - q + 1)) * std::pow(gamma, q);
    }
  }
  return clamp01(1.0 - sum * std::exp(-ch.psi * gamma));
}

double sr_mean_snr(const ShadowedRicianChannel& ch) {
  double sum = 0.0;
  double l_fact = 1.0;
  for (int l = 0; l < ch.m; ++l) {
    if (l > 0) l_fact *= l;
    double base = ch.vartheta * specfun::pochhammer(1.0 - ch.m, l) *
                  std::pow(-ch.delta, l) /
                  (std::pow(ch.avg_snr, l + 1) * l_fact);
    double q_fact = 1.0;
    for (int q = 0; q <= l; ++q) {
      if (q > 0) q_fact *= q;
      // int_0^inf of the survival term: Gamma(1+q) psi^-(q+1)
      sum += base / (q_fact * std::pow(ch.psi, l - q + 1)) * q_fact *
             std::pow(ch.psi, -(q + 1));
    }
  }
  return sum;
}

double sr_sample(const ShadowedRicianChannel& ch, Rng& rng) {
  // LOS amplitude^2 ~ Gamma(m, omega/m) (Nakagami-m power), scatter complex
  // Gaussian with per-dimension variance b.
  std::gamma_distribution<double> los(double(ch.m), ch.omega / ch.m);
  std::normal_distribution<double> scatter(0.0, std::sqrt(ch.b));
  double a = std::sqrt(los(rng));
  double x = a + scatter(rng);
  double y = scatter(rng);
  return ch.avg_snr * (x * x + y * y);
}

PointingParams pe_params(const PointingError& pe) {
  if (!(pe.aperture_radius_m > 0) || !(pe.beam_width_rx_m > 0) ||
      !(pe.jitter_sigma_m > 0))
    throw std::invalid_argument("pointing-error parameters must be positive");
  double v = std::sqrt(kPi / 2.0) * pe.aperture_radius_m / pe.beam_width_rx_m;
  double erf_v = std::erf(v);
  double A0 = erf_v * erf_v;
  double w_eq2 = pe.beam_width_rx_m * pe.beam_width_rx_m * std::sqrt(kPi) *
                 erf_v / (2.0 * v * std::exp(-v * v));
  double w_eq = std::sqrt(w_eq2);
  return {A0, w_eq, w_eq / (2.0 * pe.jitter_sigma_m)};
}

double pe_pdf(const PointingError& pe, double x) {
  auto [A0, w_eq, g] = pe_params(pe);
  if (x <= 0 || x > A0) return 0.0;
  double g2 = g * g;
  return g2 / std::pow(A0, g2) * std::pow(x, g2 - 1.0);
}

double pe_sample(const PointingError& pe, Rng& rng) {
  auto [A0, w_eq, g] = pe_params(pe);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = 1.0 - unif(rng);  // in (0, 1]
  double r = pe.jitter_sigma_m * std::sqrt(-2.0 * std::log(u));  // Rayleigh
  return A0 * std::exp(-2.0 * r * r / (w_eq * w_eq));
}

EwChannel EwChannel::with_avg_snr(double s) const {
  EwChannel c = *this;
  c.avg_snr = s;
  return c;
}

EwFit ew_fit(double S) {
  if (!(S > 0)) throw std::invalid_argument("scintillation index must be positive");
  double alpha = 7.220 * std::pow(S, 1.0 / 3.0) /
                 specfun::gamma_fn(2.487 * std::pow(S, 1.0 / 6.0) - 0.104);
  double beta = 1.012 * std::pow(alpha * S, -13.0 / 25.0) + 0.142;
  double g1 = ew_moment_kernel(alpha, 1.0 + 1.0 / beta);
  double eta = 1.0 / (alpha * specfun::gamma_fn(1.0 + 1.0 / beta) * g1);
  if (!(alpha > 0) || !(beta > 0) || !(eta > 0))
    throw NonConvergence("ew_fit produced a non-positive parameter");
  return {alpha, beta, eta};
}

double ew_moment(double alpha, double beta, double eta, double n) {
  return alpha * std::pow(eta, n) * specfun::gamma_fn(1.0 + n / beta) *
         ew_moment_kernel(alpha, 1.0 + n / beta);
}

double ew_pdf_irradiance(const EwChannel& ch, double I) {
  if (I <= 0) return 0.0;
  double u = std::pow(I / ch.eta, ch.beta);
  double e = std::exp(-u);
  return ch.alpha * ch.beta / ch.eta * std::pow(I / ch.eta, ch.beta - 1.0) * e *
         std::pow(1.0 - e, ch.alpha - 1.0);
}

double ew_cdf_irradiance(const EwChannel& ch, double I) {
  if (I <= 0) return 0.0;
  return std::pow(-std::expm1(-std::pow(I / ch.eta, ch.beta)), ch.alpha);
}

double ew_cdf_snr(const EwChannel& ch, double gamma) {
  if (gamma <= 0) return 0.0;
  double w = std::sqrt(gamma / ch.avg_snr) / (ch.eta * ch.attenuation);
  return std::pow(-std::expm1(-std::pow(w, ch.beta)), ch.alpha);
}

double ew_cdf_snr_series(const EwChannel& ch, double gamma, int max_terms,
                         int* terms_used) {
  if (gamma <= 0) {
    if (terms_used) *terms_used = 0;
    return 0.0;
  }
  double u = std::pow(std::sqrt(gamma / ch.avg_snr) / (ch.eta * ch.attenuation),
                      ch.beta);
  double sum = 0.0;
  int used = 0;
  for (int rho = 0; rho < max_terms; ++rho) {
    double term = specfun::binomial_real(ch.alpha, rho) *
                  (rho % 2 == 0 ? 1.0 : -1.0) * std::exp(-double(rho) * u);
    sum += term;
    used = rho + 1;
    if (rho >= 5 && std::abs(term) < 1e-9 * std::abs(sum)) break;
  }
  if (terms_used) *terms_used = used;
  return clamp01(sum);
}

double ew_pe_cdf_snr(const EwChannel& ch, double gamma, int max_terms,
                     int* terms_used) {
  if (!ch.pointing)
    throw std::invalid_argument("ew_pe_cdf_snr requires a pointing-error descriptor");
  if (gamma <= 0) {
    if (terms_used) *terms_used = 0;
    return 0.0;
  }
  auto [A0, w_eq, g] = pe_params(*ch.pointing);
  double T1 = g * g / ch.beta;
  double wp = std::sqrt(gamma / ch.avg_snr) / (ch.eta * ch.attenuation * A0);
  double u0 = std::pow(wp, ch.beta);
  // F = alpha sum_i (-1)^i binom(alpha-1, i) [x^T1 Gamma(1-T1, x) + 1 - e^-x] / (1+i)
  // with x = (1+i) u0; term-by-term equal to the T2/T3 Meijer-G series.
  double coeff = 1.0;  // (-1)^i binom(alpha-1, i)
  double sum = 0.0;
  int used = 0;
  for (int i = 0; i < max_terms; ++i) {
    if (i > 0) coeff *= (i - ch.alpha) / i;
    double x = (1.0 + i) * u0;
    double piece = -std::expm1(-x);
    if (x < 745.0 && T1 < 1e6) piece += specfun::upper_gamma_power(T1, x);
    double term = coeff * piece / (1.0 + i);
    sum += term;
    used = i + 1;
    if (i >= 5 && std::abs(term) < 1e-9 * std::abs(sum)) break;
  }
  if (terms_used) *terms_used = used;
  return clamp01(ch.alpha * sum);
}

double ew_sample(const EwChannel& ch, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = unif(rng);
  double it = ch.eta *
              std::pow(-std::log1p(-std::pow(u, 1.0 / ch.alpha)), 1.0 / ch.beta);
  double I = ch.attenuation * it;
  if (ch.pointing) I *= pe_sample(*ch.pointing, rng);
  return I;
}

double ew_snr_sample(const EwChannel& ch, Rng& rng) {
  double I = ew_sample(ch, rng);
  return ch.avg_snr * I * I;
}

double ew_cdf_snr_auto(const EwChannel& ch, double gamma) {
  return ch.pointing ? ew_pe_cdf_snr(ch, gamma) : ew_cdf_snr(ch, gamma);
}

double ew_mean_snr_series(const EwChannel& ch) {
  if (ch.pointing)
    throw std::invalid_argument("series mean is defined for non-pointing hops");
  double scale = ch.eta * ch.attenuation;
  double c = scale * scale * ch.avg_snr;
  double sum = 0.0;
  double coeff = 1.0;  // binom(alpha, rho) carrier
  for (int rho = 1; rho < 100000; ++rho) {
    coeff = specfun::binomial_real(ch.alpha, rho);
    double term = coeff * (rho % 2 == 1 ? 1.0 : -1.0) *
                  std::pow(double(rho), -2.0 / ch.beta);
    sum += term;
    if (rho > 8 && std::abs(term) < 1e-12 * std::abs(sum)) break;
  }
  return c * specfun::gamma_fn(1.0 + 2.0 / ch.beta) * sum;
}

double ew_mean_snr(const EwChannel& ch) {
  double m2 = ew_moment(ch.alpha, ch.beta, ch.eta, 2.0);
  double mean = ch.avg_snr * ch.attenuation * ch.attenuation * m2;
  if (ch.pointing) {
    auto [A0, w_eq, g] = pe_params(*ch.pointing);
    double g2 = g * g;
    mean *= A0 * A0 * g2 / (g2 + 2.0);
  }
  return mean;
}

}  // namespace stratolink
