#pragma once

#include <span>
#include <vector>

#include "stratolink/channels.hpp"

namespace stratolink {

enum class ScenarioKind { S1, S2 };

// per-node transmit powers (W), used by the energy-efficiency metric
struct NodePowers {
  double ground_w = 1.0;
  double haps1_w = 1.0;
  double sat_w = 1.0;  // s2 only
  double haps2_w = 1.0;
};

// An ordered DF relay chain: RF uplink, one or two FSO hops, and a multicast
// terminal stage of N shadowed-Rician users. End-to-end SNR is the minimum
// over hops with the terminal stage contributing the best user.
struct Scenario {
  ScenarioKind kind = ScenarioKind::S1;
  ShadowedRicianChannel uplink_rf;
  std::vector<EwChannel> fso_hops;
  std::vector<ShadowedRicianChannel> users;
  int time_slots = 3;
  NodePowers powers;

  static Scenario s1(ShadowedRicianChannel uplink, EwChannel inter_haps,
                     std::vector<ShadowedRicianChannel> users,
                     NodePowers powers = {});
  static Scenario s2(ShadowedRicianChannel uplink, EwChannel haps_to_sat,
                     EwChannel sat_to_haps,
                     std::vector<ShadowedRicianChannel> users,
                     NodePowers powers = {});
  void validate() const;
};

// CDF of the best-user SNR: product of the per-user CDFs.
double multicast_cdf(std::span<const ShadowedRicianChannel> users, double gamma);

// CDF of the end-to-end SNR (min over hops, terminal stage = best user).
double system_cdf(const Scenario& sc, double gamma);

// One end-to-end SNR draw.
double system_sample(const Scenario& sc, Rng& rng);

}  // namespace stratolink
