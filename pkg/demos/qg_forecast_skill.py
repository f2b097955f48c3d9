"""Forecast skill of the coarse ocean-model surrogates.

Measures how quickly the 64x64 and 32x32 coarse steppers drift away from
the 128x128 reference on the wind-driven double-gyre, starting from
snapshots of the attractor. Also prints the satellite-track observation
geometry used by the assimilation experiments.
"""

from mfda.experiments import ExperimentConfig, forecast_rmse_study
from mfda.filters import FilterConfig
from mfda.observations import satellite_tracks


def main():
    op = satellite_tracks(128, 128)
    print(f"satellite operator: {op.m} nodes ({op.description})")
    print()

    cfg = ExperimentConfig(
        model="qg",
        surrogate="m64",
        filter=FilterConfig(),
        N_X=2, N_U=2, T=4, burn_in=1, M=1,
        base_seed=2024, obs_count=344, obs_frequency_steps=4,
    )
    leads = (1, 2, 4)  # one step is about six hours
    table = forecast_rmse_study(cfg, ("m64", "m32"), leads, M_ic=10)
    print(f"{'lead (steps)':>12s} {'m64':>8s} {'m32':>8s}")
    for lead in leads:
        print(f"{lead:12d} {table['m64'][lead]:8.3f} {table['m32'][lead]:8.3f}")
    print()
    print("halving the resolution roughly triples the short-range error;")
    print("that gap is what the control-variate coupling exploits")


if __name__ == "__main__":
    main()
