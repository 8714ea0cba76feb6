#pragma once

#include <optional>
#include <random>
#include <vector>

namespace stratolink {

using Rng = std::mt19937_64;

// Shadowed-Rician RF hop: gamma = avg_snr * |h|^2. Integer m keeps the CDF a
// finite sum.
struct ShadowedRicianChannel {
  int m = 1;
  double b = 0.063;
  double omega = 8.94e-4;
  double avg_snr = 1.0;

  // derived constants of the pdf/CDF
  double vartheta = 0, varsigma = 0, delta = 0, psi = 0;

  static ShadowedRicianChannel create(int m, double b, double omega,
                                      double avg_snr);
  ShadowedRicianChannel with_avg_snr(double new_avg_snr) const;
};

// named presets (frequent heavy / average / infrequent light shadowing)
ShadowedRicianChannel sr_heavy(double avg_snr);
ShadowedRicianChannel sr_average(double avg_snr);
ShadowedRicianChannel sr_light(double avg_snr);

double sr_pdf(const ShadowedRicianChannel& ch, double gamma);
double sr_cdf(const ShadowedRicianChannel& ch, double gamma);
double sr_mean_snr(const ShadowedRicianChannel& ch);  // closed-form E[gamma]
double sr_sample(const ShadowedRicianChannel& ch, Rng& rng);

// Zero-boresight pointing error geometry.
struct PointingError {
  double aperture_radius_m = 0.05;  // a
  double beam_width_rx_m = 1.0;     // w_z
  double jitter_sigma_m = 0.10;     // sigma_s
};
struct PointingParams {
  double A0;    // gathered power fraction at zero displacement
  double w_eq;  // equivalent beam width
  double g;     // w_eq / (2 sigma_s)
};
PointingParams pe_params(const PointingError& pe);
double pe_pdf(const PointingError& pe, double x);
double pe_sample(const PointingError& pe, Rng& rng);

// Exponentiated-Weibull optical hop: gamma = avg_snr * (I_a I_t [I_p])^2.
struct EwChannel {
  double alpha = 1.0;
  double beta = 1.0;
  double eta = 1.0;
  double attenuation = 1.0;  // deterministic I_a in (0, 1]
  double avg_snr = 1.0;
  std::optional<PointingError> pointing;

  EwChannel with_avg_snr(double new_avg_snr) const;
};

struct EwFit {
  double alpha, beta, eta;
};
// Shape/scale triple from the scintillation index; eta normalizes E[I_t] = 1.
EwFit ew_fit(double scintillation_index);

// n-th moment E[I_t^n] of the bare turbulence irradiance
double ew_moment(double alpha, double beta, double eta, double n);

double ew_pdf_irradiance(const EwChannel& ch, double irradiance);
double ew_cdf_irradiance(const EwChannel& ch, double irradiance);

// SNR-domain CDF; closed form and the binomial-series expansion of it.
double ew_cdf_snr(const EwChannel& ch, double gamma);
double ew_cdf_snr_series(const EwChannel& ch, double gamma, int max_terms = 50,
                         int* terms_used = nullptr);

// SNR-domain CDF of the composite turbulence x pointing channel (series with
// Meijer-G terms reduced per-term to incomplete gamma form).
double ew_pe_cdf_snr(const EwChannel& ch, double gamma, int max_terms = 400,
                     int* terms_used = nullptr);

// composite irradiance draw: attenuation x turbulence x optional pointing
double ew_sample(const EwChannel& ch, Rng& rng);

// hop-level pieces
double ew_snr_sample(const EwChannel& ch, Rng& rng);
double ew_cdf_snr_auto(const EwChannel& ch, double gamma);  // pointing-aware

// E[gamma]: binomial-series route (no pointing) and moment route (general).
double ew_mean_snr_series(const EwChannel& ch);
double ew_mean_snr(const EwChannel& ch);

}  // namespace stratolink
