#pragma once

#include <vector>

#include "isac/scenario.hpp"
#include "isac/sensing.hpp"

namespace isac {

enum class Decision { kThzComm, kVlc, kUnserved };

struct Association {
  std::vector<Decision> decision;
  std::vector<int> serving_vlc_ap;   // -1 unless the decision is kVlc
  std::vector<double> achieved_snr;  // comm SNR at the executed powers; 0 when unserved
};

/// Serving rule: detected users ride the THz comm link; the rest go to the
/// max-SNR VLC AP when that AP can meet gamma_VLC within p_max, else they
/// stay unserved. VLC ties resolve to the lowest AP index. `vlc_snr_at_pmax`
/// holds, per user, the SNR of each AP evaluated at p_max, so feasibility is
/// the comparison against gamma_VLC.
Association associate_users(const std::vector<DetectionOutcome>& detections,
                            const std::vector<double>& thz_comm_snrs,
                            const std::vector<std::vector<double>>& vlc_snr_at_pmax,
                            const Thresholds& thresholds);

}  // namespace isac
