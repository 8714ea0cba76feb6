#include "stratolink/atmosphere.hpp"

#include <cmath>
#include <stdexcept>

#include "stratolink/quadrature.hpp"

namespace stratolink {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_slant(const TurbulencePath& p) {
  if (!(p.h_high_m > p.h_low_m) || p.h_low_m < 0)
    throw std::invalid_argument("slant path requires h_high > h_low >= 0");
  if (!(p.zenith_deg >= 0 && p.zenith_deg < 90))
    throw std::invalid_argument("zenith angle must lie in [0, 90) degrees");
}
}  // namespace

double TurbulencePath::zenith_rad() const { return zenith_deg * kPi / 180.0; }
double TurbulencePath::wavenumber() const { return 2.0 * kPi / wavelength_m; }

namespace atmosphere {

double rms_wind_speed(double v_ms) {
  return std::sqrt(v_ms * v_ms + 30.69 * v_ms + 348.91);
}

double cn2_profile(double h_m, const TurbulencePath& path) {
  if (h_m < 0) throw std::invalid_argument("cn2_profile: altitude must be >= 0");
  double u = rms_wind_speed(path.wind_speed_ms);
  double a = u / 27.0;
  double t1 = 0.00594 * a * a * std::pow(1e-5 * h_m, 10) * std::exp(-h_m / 1000.0);
  double t2 = 2.7e-16 * std::exp(-h_m / 1500.0);
  double t3 = path.cn2_nominal * std::exp(-h_m / 100.0);
  return t1 + t2 + t3;
}

double cn2_integral(const TurbulencePath& path) {
  require_slant(path);
  return quad::integrate([&](double h) { return cn2_profile(h, path); },
                         path.h_low_m, path.h_high_m, 1e-9);
}

double slant_length(const TurbulencePath& path) {
  require_slant(path);
  return (path.h_high_m - path.h_low_m) / std::cos(path.zenith_rad());
}

double fried_parameter(const TurbulencePath& path) {
  double K = path.wavenumber();
  double sec = 1.0 / std::cos(path.zenith_rad());
  return std::pow(0.42 * sec * K * K * cn2_integral(path), -3.0 / 5.0);
}

double scintillation_horizontal(const TurbulencePath& path,
                                double distance_exponent) {
  if (!(path.link_length_m > 0))
    throw std::invalid_argument("horizontal path requires link_length > 0");
  return 1.23 * path.cn2_nominal * std::pow(path.wavenumber(), 7.0 / 6.0) *
         std::pow(path.link_length_m, distance_exponent);
}

BeamParams beam_parameters(const TurbulencePath& path) {
  double L = slant_length(path);
  double theta0 = std::isinf(path.phase_front_radius_m)
                      ? 1.0
                      : 1.0 - L / path.phase_front_radius_m;
  double lambda0 =
      2.0 * L / (path.wavenumber() * path.beam_radius_tx_m * path.beam_radius_tx_m);
  double denom = theta0 * theta0 + lambda0 * lambda0;
  return {theta0, lambda0, path.beam_radius_tx_m * std::sqrt(denom),
          theta0 / denom};
}

double beam_wander_variance(const TurbulencePath& path) {
  double L = slant_length(path);
  double r0 = fried_parameter(path);
  double W0 = path.beam_radius_tx_m;
  double Cr = kPi;  // scaling constant for lambda = 1550 nm
  double x = Cr * Cr * W0 * W0 / (r0 * r0);
  double bracket = 1.0 - std::pow(x / (1.0 + x), 1.0 / 6.0);
  double lam_over = path.wavelength_m / (2.0 * W0);
  return 0.54 * L * L * lam_over * lam_over * std::pow(2.0 * W0 / r0, 5.0 / 3.0) *
         bracket;
}

double rytov_variance_uplink(const TurbulencePath& path) {
  require_slant(path);
  double dH = path.h_high_m - path.h_low_m;
  // mu_3u = Re int Cn^2(h) [i eps (1-eps)]^{5/6} dh,  eps = 1 - (h-h_low)/dH
  double cos5pi12 = std::cos(5.0 * kPi / 12.0);
  double mu3 = cos5pi12 * quad::integrate(
                              [&](double h) {
                                double u = (h - path.h_low_m) / dH;
                                return cn2_profile(h, path) *
                                       std::pow(u * (1.0 - u), 5.0 / 6.0);
                              },
                              path.h_low_m, path.h_high_m, 1e-9);
  double sec = 1.0 / std::cos(path.zenith_rad());
  return 8.7 * mu3 * std::pow(path.wavenumber(), 7.0 / 6.0) *
         std::pow(dH, 5.0 / 6.0) * std::pow(sec, 11.0 / 6.0);
}

double rytov_variance_downlink(const TurbulencePath& path) {
  require_slant(path);
  double integral = quad::integrate(
      [&](double h) {
        return cn2_profile(h, path) * std::pow(h - path.h_low_m, 5.0 / 6.0);
      },
      path.h_low_m, path.h_high_m, 1e-9);
  double sec = 1.0 / std::cos(path.zenith_rad());
  return 2.25 * std::pow(path.wavenumber(), 7.0 / 6.0) *
         std::pow(sec, 11.0 / 6.0) * integral;
}

double scintillation_uplink(const TurbulencePath& path) {
  double dH = path.h_high_m - path.h_low_m;
  double sec = 1.0 / std::cos(path.zenith_rad());
  double r0 = fried_parameter(path);
  BeamParams beam = beam_parameters(path);
  double alpha_pe = std::sqrt(beam_wander_variance(path)) / slant_length(path);
  double pointing = 5.95 * dH * dH * sec * sec *
                    std::pow(2.0 * path.beam_radius_tx_m / r0, 5.0 / 3.0) *
                    (alpha_pe / beam.spot_radius) * (alpha_pe / beam.spot_radius);
  double s2 = rytov_variance_uplink(path);
  double s125 = std::pow(s2, 6.0 / 5.0);
  double longitudinal =
      std::expm1(0.49 * s2 / std::pow(1.0 + (1.11 + beam.theta) * s125, 7.0 / 6.0) +
                 0.51 * s2 / std::pow(1.0 + 0.69 * s125, 5.0 / 6.0));
  return pointing + longitudinal;
}

double scintillation_downlink(const TurbulencePath& path,
                              double aperture_diameter_m) {
  if (!(aperture_diameter_m >= 0))
    throw std::invalid_argument("aperture diameter must be >= 0");
  double s2 = rytov_variance_downlink(path);
  double d2 = path.wavenumber() * aperture_diameter_m * aperture_diameter_m /
              (4.0 * slant_length(path));
  double s125 = std::pow(s2, 6.0 / 5.0);
  double first = 0.49 * s2 / std::pow(1.0 + 0.18 * d2 + 0.56 * s125, 7.0 / 6.0);
  double second = 0.51 * s2 * std::pow(1.0 + 0.69 * s125, -5.0 / 6.0) /
                  (1.0 + 0.90 * d2 + 0.62 * d2 * s125);
  return std::expm1(first + second);
}

double stratospheric_attenuation(double phi_per_m, double distance_m) {
  if (phi_per_m < 0 || distance_m < 0)
    throw std::invalid_argument("attenuation inputs must be >= 0");
  return std::exp(-phi_per_m * distance_m);
}

double path_loss_dB(const PathLossBudget& b) {
  if (!(b.freq_GHz > 0) || !(b.distance_km > 0))
    throw std::invalid_argument("path loss requires positive frequency and distance");
  double free_space =
      92.45 + 20.0 * std::log10(b.freq_GHz) + 20.0 * std::log10(b.distance_km);
  return b.gain_tx_dBi + b.gain_rx_dBi - free_space - b.rain_loss_dB -
         b.gas_loss_dB;
}

double haps_separation(double h_haps_m, double h_sat_m, double zenith_deg) {
  if (!(h_sat_m > h_haps_m))
    throw std::invalid_argument("separation requires h_sat > h_haps");
  return 2.0 * (h_sat_m - h_haps_m) * std::tan(zenith_deg * kPi / 180.0);
}

}  // namespace atmosphere
}  // namespace stratolink
