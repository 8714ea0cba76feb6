#pragma once

#include <limits>

namespace stratolink {

// Geometry and atmospheric inputs of one optical hop. Slant paths are
// described by the two terminal altitudes and the zenith angle; horizontal
// inter-platform paths by link_length_m with a constant Cn^2 = cn2_nominal.
struct TurbulencePath {
  double h_low_m = 0;
  double h_high_m = 0;
  double zenith_deg = 0;
  double wind_speed_ms = 21.0;  // ground wind v_s feeding the rms profile wind
  double cn2_nominal = 1e-18;   // C0 at the receiver, m^-2/3
  double wavelength_m = 1550e-9;
  double beam_radius_tx_m = 0.02;  // W0
  double phase_front_radius_m = std::numeric_limits<double>::infinity();  // F0
  double link_length_m = 0;  // horizontal paths

  double zenith_rad() const;
  double wavenumber() const;  // K = 2 pi / lambda
};

struct PathLossBudget {
  double gain_tx_dBi = 0;
  double gain_rx_dBi = 0;
  double freq_GHz = 2.0;
  double distance_km = 18.0;
  double rain_loss_dB = 0;
  double gas_loss_dB = 0;
};

namespace atmosphere {

// rms wind speed u_s = sqrt(v^2 + 30.69 v + 348.91)
double rms_wind_speed(double v_ms);

// Hufnagel-Valley style profile with rms wind u_s(path) and ground value C0.
double cn2_profile(double h_m, const TurbulencePath& path);

// integral of Cn^2 over [h_low, h_high]
double cn2_integral(const TurbulencePath& path);

double slant_length(const TurbulencePath& path);

// r0 = [0.42 sec(xi) K^2 int Cn^2 dh]^{-3/5}
double fried_parameter(const TurbulencePath& path);

// sigma_I^2 = 1.23 Cn^2 K^{7/6} L^e. Default exponent 11/6 (plane-wave Rytov);
// exposed so the printed 11/7 variant can be selected from the config.
double scintillation_horizontal(const TurbulencePath& path,
                                double distance_exponent = 11.0 / 6.0);

struct BeamParams {
  double theta0;      // transmitter beam curvature parameter
  double lambda0;     // transmitter Fresnel ratio
  double spot_radius; // W at the receiver
  double theta;       // receiver curvature parameter
};
BeamParams beam_parameters(const TurbulencePath& path);

// beam-wander displacement variance sigma_pe^2 (m^2), C_r = pi
double beam_wander_variance(const TurbulencePath& path);

// Rytov variances: sigma_Bu^2 (uplink, via mu_3u) and sigma_Bd^2 (downlink).
double rytov_variance_uplink(const TurbulencePath& path);
double rytov_variance_downlink(const TurbulencePath& path);

// scintillation index of the slant uplink, beam wander included
double scintillation_uplink(const TurbulencePath& path);

// aperture-averaged scintillation index of the slant downlink
double scintillation_downlink(const TurbulencePath& path,
                              double aperture_diameter_m);

// Beer-Lambert: exp(-phi L)
double stratospheric_attenuation(double phi_per_m, double distance_m);

// F[dB] = G_T + G_R - (92.45 + 20 log f + 20 log d) - L_R - L_A
double path_loss_dB(const PathLossBudget& budget);

// flat-Earth separation of the two platforms under symmetric zenith angles
double haps_separation(double h_haps_m, double h_sat_m, double zenith_deg);

}  // namespace atmosphere
}  // namespace stratolink
