"""Indoor THz sensing with hybrid THz/VLC communication: simulator bindings."""

from isacsim._core import (
    Scenario,
    ValidationError,
    blockage_probability,
    blocker_distance,
    concentrator_gain,
    detection_probability,
    effective_density,
    erfc,
    erfcinv,
    lambertian_order,
    molecular_absorption_gain,
    place_users,
    run_monte_carlo,
    run_trial,
    sensing_path_loss,
    thz_comm_gain,
    thz_spreading_gain,
    __version__,
)

__all__ = [
    "Scenario",
    "ValidationError",
    "blockage_probability",
    "blocker_distance",
    "concentrator_gain",
    "detection_probability",
    "effective_density",
    "erfc",
    "erfcinv",
    "lambertian_order",
    "molecular_absorption_gain",
    "place_users",
    "run_monte_carlo",
    "run_trial",
    "sensing_path_loss",
    "thz_comm_gain",
    "thz_spreading_gain",
    "__version__",
]
