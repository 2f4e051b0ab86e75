#include <cmath>

#include "doctest.h"
#include "isac/channel.hpp"
#include "isac/links.hpp"
#include "isac/sensing.hpp"
#include "isac/specfun.hpp"
#include "isac/units.hpp"
#include "oracles.hpp"

using namespace isac;

TEST_CASE("detection probability is anchored at the false-alarm rate") {
  for (double fa : {1e-5, 1e-2, 0.3, 0.9}) {
    CHECK(std::abs(detection_probability(0.0, fa) - fa) < 1e-12);
  }
}

TEST_CASE("detection probability at 10 dB of sensing SNR") {
  const double pd = detection_probability(10.0, 1e-2);
  CHECK(std::abs(pd - 0.7986) < 5e-4);
  CHECK(pd == doctest::Approx(oracle::detection_probability_by_quadrature(10.0, 1e-2))
                  .epsilon(1e-7));
}

TEST_CASE("fa_p of one half lower-bounds the detector at one half") {
  for (double snr : {0.0, 0.3, 2.0, 50.0}) {
    const double pd = detection_probability(snr, 0.5);
    CHECK(pd >= 0.5);
    CHECK(pd == doctest::Approx(0.5 * isac::erfc(-std::sqrt(0.5 * snr))).epsilon(1e-13));
  }
}

TEST_CASE("detector monotonicity and range") {
  SUBCASE("strictly increasing in snr") {
    for (double fa : {1e-4, 1e-2, 0.4}) {
      double prev = detection_probability(0.0, fa);
      for (double snr = 0.5; snr <= 64.0; snr *= 2.0) {
        const double pd = detection_probability(snr, fa);
        CHECK(pd > prev);
        prev = pd;
      }
    }
  }
  SUBCASE("strictly increasing in fa_p") {
    for (double snr : {0.0, 1.0, 9.0}) {
      double prev = detection_probability(snr, 1e-6);
      for (double fa : {1e-4, 1e-2, 0.1, 0.5, 0.9}) {
        const double pd = detection_probability(snr, fa);
        CHECK(pd > prev);
        prev = pd;
      }
    }
  }
  SUBCASE("stays within [0, 1] up to extreme snr") {
    for (double snr : {0.0, 1.0, 1e3, 1e6}) {
      for (double fa : {1e-9, 1e-2, 0.999}) {
        const double pd = detection_probability(snr, fa);
        CHECK(pd >= 0.0);
        CHECK(pd <= 1.0);
      }
    }
  }
  CHECK_THROWS_AS(detection_probability(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(detection_probability(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(detection_probability(-1.0, 0.5), std::domain_error);
}

TEST_CASE("alternate printed detector form stays available for comparisons") {
  const double pd = detection_probability_alt(10.0, 1e-2);
  CHECK(pd >= 0.0);
  CHECK(pd <= 1.0);
  CHECK(pd != doctest::Approx(detection_probability(10.0, 1e-2)).epsilon(1e-6));
}

TEST_CASE("sensing SNR composes power split, path loss and noise") {
  Scenario s = default_scenario();
  s.blockage_enabled = false;
  UserRx u = s.user_template;
  u.position = {2.5, 2.5, 0.85};
  u.rcs = 1.0;

  SUBCASE("no sensing power, no sensing SNR") {
    CHECK(sensing_snr(u, s, 0.0) == 0.0);
  }
  SUBCASE("linear in the radar cross-section") {
    UserRx u2 = u;
    u2.rcs = 3.0;
    CHECK(sensing_snr(u2, s, 0.4) == doctest::Approx(3.0 * sensing_snr(u, s, 0.4))
                                         .epsilon(1e-12));
  }
  SUBCASE("chained direct evaluation at the room centre") {
    const double d = distance(u.position, s.thz_sensing_ap_pos);
    const double loss =
        sensing_path_loss(d, s.thz.carrier_frequency, s.thz.absorption_coefficient, 1.0)
            .gain;
    const double expected = (s.thz.total_power + s.thz.circuitry_power) * 0.5 * loss /
                            (s.thz.noise_psd * s.thz.bandwidth);
    CHECK(sensing_snr(u, s, 0.5) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sensing_snr(u, s, 1.5), std::domain_error);
}

TEST_CASE("sensing coverage counts users above the threshold") {
  std::vector<DetectionOutcome> v(4);
  for (auto& d : v) d.covered = true;
  CHECK(sensing_coverage(v) == doctest::Approx(1.0));
  for (auto& d : v) d.covered = false;
  CHECK(sensing_coverage(v) == doctest::Approx(0.0));
  v[0].covered = v[1].covered = true;
  CHECK(sensing_coverage(v) == doctest::Approx(0.5));
  CHECK_THROWS_AS(sensing_coverage({}), std::domain_error);
}
