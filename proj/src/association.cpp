#include "isac/association.hpp"

#include <stdexcept>

namespace isac {

Association associate_users(const std::vector<DetectionOutcome>& detections,
                            const std::vector<double>& thz_comm_snrs,
                            const std::vector<std::vector<double>>& vlc_snr_at_pmax,
                            const Thresholds& thresholds) {
  const std::size_t n = detections.size();
  if (thz_comm_snrs.size() != n || vlc_snr_at_pmax.size() != n)
    throw std::domain_error("associate_users: inconsistent user indexing");

  Association out;
  out.decision.assign(n, Decision::kUnserved);
  out.serving_vlc_ap.assign(n, -1);
  out.achieved_snr.assign(n, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    if (detections[i].p_d > thresholds.detection) {
      out.decision[i] = Decision::kThzComm;
      out.achieved_snr[i] = thz_comm_snrs[i];
      continue;
    }
    int best = -1;
    double best_snr = 0.0;
    for (std::size_t l = 0; l < vlc_snr_at_pmax[i].size(); ++l) {
      if (vlc_snr_at_pmax[i][l] > best_snr) {  // strict: ties keep the lowest index
        best_snr = vlc_snr_at_pmax[i][l];
        best = static_cast<int>(l);
      }
    }
    if (best >= 0 && best_snr >= thresholds.vlc_snr) {
      out.decision[i] = Decision::kVlc;
      out.serving_vlc_ap[i] = best;
      out.achieved_snr[i] = best_snr;  // refined to the executed power later
    }
  }
  return out;
}

}  // namespace isac
