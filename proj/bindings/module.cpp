#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isac/blockage.hpp"
#include "isac/channel.hpp"
#include "isac/config.hpp"
#include "isac/engine.hpp"
#include "isac/links.hpp"
#include "isac/power.hpp"
#include "isac/rng.hpp"
#include "isac/scenario.hpp"
#include "isac/sensing.hpp"
#include "isac/specfun.hpp"

namespace py = pybind11;
using namespace isac;

namespace {

py::dict aggregate_to_dict(const AggregateResult& agg) {
  py::dict metrics;
  const auto& names = TrialScalars::names();
  for (std::size_t k = 0; k < TrialScalars::kCount; ++k) {
    py::dict entry;
    entry["mean"] = agg.mean[k];
    entry["std"] = agg.stddev[k];
    metrics[names[k]] = entry;
  }
  py::dict out;
  out["trials"] = agg.trials;
  out["metrics"] = metrics;
  return out;
}

py::dict trial_to_dict(const Scenario& s, const TrialResult& trial) {
  py::list users;
  for (std::size_t i = 0; i < trial.users.size(); ++i) {
    py::dict u;
    u["x"] = trial.users[i].position.x;
    u["y"] = trial.users[i].position.y;
    u["rcs"] = trial.users[i].rcs;
    u["snr_sens"] = trial.detections[i].snr_sens;
    u["p_d"] = trial.detections[i].p_d;
    u["covered"] = trial.detections[i].covered;
    u["detected"] = trial.detections[i].detected;
    const Decision d = trial.association.decision[i];
    u["association"] = d == Decision::kThzComm ? "thz"
                       : d == Decision::kVlc   ? "vlc"
                                               : "unserved";
    u["serving_vlc_ap"] = trial.association.serving_vlc_ap[i];
    u["comm_snr"] = trial.association.achieved_snr[i];
    users.append(u);
  }
  py::dict milp;
  milp["active"] = trial.milp.active;
  milp["power_w"] = trial.milp.power;
  milp["objective_w"] = trial.milp.objective;
  milp["unserved"] = trial.milp.unserved;

  py::dict metrics;
  metrics["avg_se"] = trial.metrics.avg_se;
  metrics["avg_ee"] = trial.metrics.avg_ee;
  metrics["avg_sens_rate"] = trial.metrics.avg_sens_rate;
  metrics["avg_comm_rate"] = trial.metrics.avg_comm_rate;
  metrics["sc_p"] = trial.metrics.sc_p;
  metrics["total_power"] = trial.metrics.total_power;
  metrics["thz_user_count"] = trial.metrics.thz_user_count;
  metrics["vlc_user_count"] = trial.metrics.vlc_user_count;
  metrics["unserved_count"] = trial.metrics.unserved_count;
  metrics["min_illuminance_ok"] = trial.metrics.min_illuminance_ok;

  py::dict out;
  out["rho1"] = trial.split.rho1;
  out["required_fraction"] = trial.split.required_fraction;
  out["sensing_ok"] = trial.split.sensing_ok;
  out["users"] = users;
  out["milp"] = milp;
  out["metrics"] = metrics;
  out["fingerprint"] = scenario_fingerprint(s);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Indoor THz sensing with hybrid THz/VLC communication: simulator core";

  py::register_exception<ValidationError>(m, "ValidationError");

  py::class_<Scenario>(m, "Scenario")
      .def_static("default", &default_scenario)
      .def_static(
          "from_json",
          [](const std::string& text) { return load_scenario_string(text, {}); },
          py::arg("text"))
      .def("to_json", [](const Scenario& s) { return scenario_to_json(s).dump(2); })
      .def("fingerprint", &scenario_fingerprint)
      .def_property_readonly("user_count", [](const Scenario& s) { return s.user_count; })
      .def_property_readonly("vlc_ap_count",
                             [](const Scenario& s) { return s.vlc_aps.size(); })
      .def_property_readonly("mode",
                             [](const Scenario& s) { return std::string(mode_name(s.mode)); })
      .def("__repr__", [](const Scenario& s) {
        return "<Scenario users=" + std::to_string(s.user_count) +
               " vlc_aps=" + std::to_string(s.vlc_aps.size()) + " mode=" +
               mode_name(s.mode) + ">";
      });

  m.def("erfc", &isac::erfc, py::arg("x"));
  m.def("erfcinv", &isac::erfcinv, py::arg("y"));
  m.def("detection_probability", &detection_probability, py::arg("snr"),
        py::arg("false_alarm"));

  m.def("thz_spreading_gain", &thz_spreading_gain, py::arg("distance"),
        py::arg("frequency"));
  m.def("molecular_absorption_gain", &molecular_absorption_gain,
        py::arg("absorption_coefficient"), py::arg("distance"));
  m.def(
      "thz_comm_gain",
      [](double d, double f, double k) { return thz_comm_gain(d, f, k).gain; },
      py::arg("distance"), py::arg("frequency"), py::arg("absorption_coefficient"));
  m.def("lambertian_order", &lambertian_order, py::arg("semi_angle"));
  m.def("concentrator_gain", &concentrator_gain, py::arg("incidence_angle"),
        py::arg("fov"), py::arg("refractive_index"));
  m.def(
      "sensing_path_loss",
      [](double d, double f, double k, double rcs) {
        return sensing_path_loss(d, f, k, rcs).gain;
      },
      py::arg("distance"), py::arg("frequency"), py::arg("absorption_coefficient"),
      py::arg("rcs"));

  m.def("effective_density", &effective_density, py::arg("baseline_intensity"),
        py::arg("hardcore_distance"));
  m.def("blocker_distance", &blocker_distance, py::arg("horizontal_distance"),
        py::arg("blocker_height"), py::arg("mount_height"));
  m.def(
      "blockage_probability",
      [](double density, double exposure, double radius) {
        const BlockageWeight w = blockage_probability(density, exposure, radius);
        return py::make_tuple(w.p_block, w.los_weight);
      },
      py::arg("density"), py::arg("exposure_distance"), py::arg("blocker_radius"));

  m.def(
      "place_users",
      [](const Scenario& s, std::uint64_t seed) {
        py::list out;
        for (const UserRx& u : place_users(s, seed))
          out.append(py::make_tuple(u.position.x, u.position.y, u.position.z, u.rcs));
        return out;
      },
      py::arg("scenario"), py::arg("seed"));

  m.def(
      "run_trial",
      [](const Scenario& s, std::uint64_t seed) {
        return trial_to_dict(s, run_trial(s, seed));
      },
      py::arg("scenario"), py::arg("seed"));

  m.def(
      "run_monte_carlo",
      [](const Scenario& s, int trials, std::uint64_t base_seed, unsigned threads) {
        AggregateResult agg;
        {
          py::gil_scoped_release release;
          agg = run_monte_carlo(s, trials, base_seed, threads);
        }
        return aggregate_to_dict(agg);
      },
      py::arg("scenario"), py::arg("trials") = 1000, py::arg("base_seed") = 42,
      py::arg("threads") = 0);

  m.attr("__version__") = "0.1.0";
}
