"""Inspect the committed network weights and measure their forecast error.

Loads the weight container shipped under artifacts/, prints its manifest,
and compares two chained surrogate calls (6h) against the reference
integrator from fresh initial conditions.
"""

from pathlib import Path

import numpy as np

import mfda.lorenz2005 as l05
from mfda.surrogate import (
    SurrogateSpec,
    build_engine,
    load_weights,
    surrogate_forward,
)

WEIGHTS = Path(__file__).resolve().parents[1] / "artifacts" / "lorenz_cnn.mfw"


def main():
    container = load_weights(WEIGHTS)
    print(container.describe())

    spec = SurrogateSpec.from_container(container)
    engine = build_engine(spec)
    p = l05.LorenzParams()
    x = l05.spinup_state(p, years=0.2, seed=7)

    print()
    print(f"{'lead':>6s} {'RMSE':>8s}")
    errs = {1: [], 2: [], 4: []}
    for _ in range(10):
        x = l05.step_rk4(x, p, 240)  # 30 days apart
        pred = x
        for lead in range(1, 5):
            pred = surrogate_forward(pred, spec, engine=engine)
            if lead in errs:
                truth = l05.step_rk4(x, p, lead)
                errs[lead].append(np.sqrt(np.mean((pred - truth) ** 2)))
    for lead, e in errs.items():
        print(f"{3 * lead:4d}h {np.mean(e):8.3f}")


if __name__ == "__main__":
    main()
