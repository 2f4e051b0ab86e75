#include <cmath>
#include <string>

#include "doctest.h"
#include "isac/scenario.hpp"
#include "isac/units.hpp"

using namespace isac;

TEST_CASE("default scenario matches the reference deployment") {
  const Scenario s = default_scenario();
  CHECK(s.thz.carrier_frequency == doctest::Approx(370e9));
  CHECK(s.vlc_aps.size() == 4);
  CHECK(s.user_count == 10);
  CHECK(s.user_template.position.z == doctest::Approx(0.85));
  CHECK(s.thz.total_power == doctest::Approx(2.0));
  CHECK(s.thz.circuitry_power == doctest::Approx(5.6e-3));
  CHECK(s.thz.noise_psd == doctest::Approx(3.98107170553e-21).epsilon(1e-9));
  CHECK(s.vlc_aps[0].noise_psd == doctest::Approx(1e-30).epsilon(1e-9));
  CHECK(s.thresholds.sensing_snr == doctest::Approx(db_to_linear(-5.0)));
  CHECK(s.thresholds.comm_snr == doctest::Approx(db_to_linear(25.0)));
  CHECK(s.blockage.density == doctest::Approx(4.0));
  CHECK(s.blockage.blocker_radius == doctest::Approx(2.0));
  CHECK_NOTHROW(validate_scenario(s));
}

TEST_CASE("validation reports the first violated invariant with a field path") {
  SUBCASE("nonpositive VLC power") {
    Scenario s = default_scenario();
    for (auto& ap : s.vlc_aps) ap.max_power = 0.0;
    CHECK_THROWS_WITH_AS(validate_scenario(s), "vlc.max_power_w: p_max must be positive",
                         ValidationError);
  }
  SUBCASE("blocker taller than the mount height") {
    Scenario s = default_scenario();
    s.blockage.blocker_height = 3.5;  // mount is 2.8 m
    CHECK_THROWS_AS(validate_scenario(s), ValidationError);
    try {
      validate_scenario(s);
    } catch (const ValidationError& e) {
      CHECK(e.field() == "blockage.blocker_height_m");
    }
  }
  SUBCASE("AP below the user plane") {
    Scenario s = default_scenario();
    s.thz_sensing_ap_pos.z = 0.5;
    s.thz_comm_ap_pos.z = 0.5;
    for (auto& ap : s.vlc_aps) ap.position.z = 0.5;
    CHECK_THROWS_AS(validate_scenario(s), ValidationError);
  }
  SUBCASE("negative bandwidth") {
    Scenario s = default_scenario();
    s.thz.bandwidth = -1.0;
    try {
      validate_scenario(s);
      CHECK(false);
    } catch (const ValidationError& e) {
      CHECK(e.field() == "thz.bandwidth_hz");
    }
  }
  SUBCASE("false alarm outside (0,1)") {
    Scenario s = default_scenario();
    s.thresholds.false_alarm = 1.5;
    try {
      validate_scenario(s);
      CHECK(false);
    } catch (const ValidationError& e) {
      CHECK(e.field() == "thresholds.fa_p");
    }
  }
  SUBCASE("proposed mode requires a VLC AP") {
    Scenario s = default_scenario();
    s.vlc_aps.clear();
    CHECK_THROWS_AS(validate_scenario(s), ValidationError);
    s.mode = Mode::kStandaloneThz;
    CHECK_NOTHROW(validate_scenario(s));
  }
}

TEST_CASE("place_users is a pure function of scenario and seed") {
  const Scenario s = default_scenario();
  const auto a = place_users(s, 1234);
  const auto b = place_users(s, 1234);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].position.x == b[i].position.x);
    CHECK(a[i].position.y == b[i].position.y);
    CHECK(a[i].rcs == b[i].rcs);
  }
  const auto c = place_users(s, 1235);
  CHECK(a[0].position.x != c[0].position.x);
}

TEST_CASE("placed users stay inside the footprint at the user plane height") {
  Scenario s = default_scenario();
  s.user_count = 200;
  for (const UserRx& u : place_users(s, 99)) {
    CHECK(u.position.x >= 0.0);
    CHECK(u.position.x <= s.room.length);
    CHECK(u.position.y >= 0.0);
    CHECK(u.position.y <= s.room.width);
    CHECK(u.position.z == doctest::Approx(0.85));
    CHECK(u.rcs >= 0.0);
  }
}

TEST_CASE("RCS draws average to one") {
  Scenario s = default_scenario();
  s.user_count = 100000;
  double sum = 0.0;
  for (const UserRx& u : place_users(s, 2024)) sum += u.rcs;
  CHECK(sum / 100000.0 == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("growing the population keeps the existing users fixed") {
  Scenario small = default_scenario();
  small.user_count = 6;
  Scenario big = default_scenario();
  big.user_count = 9;
  const auto a = place_users(small, 7);
  const auto b = place_users(big, 7);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].position.x == b[i].position.x);
    CHECK(a[i].position.y == b[i].position.y);
    CHECK(a[i].rcs == b[i].rcs);
  }
}
