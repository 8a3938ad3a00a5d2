#!/usr/bin/env python3
"""Plot the three built-in RF-to-DC efficiency curves and exercise the fitter.

Each curve is a rational polynomial in input power. The script tabulates the
curves over their valid ranges, then samples one of them with measurement
noise and fits a fresh model to show the recovery quality. If matplotlib is
installed the curves are also saved to harvester_curves.png.
"""

import numpy as np

from marswpt.harvester import (
    BUILTIN_HARVESTERS,
    EfficiencySample,
    efficiency_percent,
    fit_model,
)

NOISE_PP = 0.3
SEED = 42


def main() -> None:
    print("built-in efficiency models")
    for name, model in BUILTIN_HARVESTERS.items():
        lo, hi = model.valid_range_mw
        grid = np.geomspace(lo, hi, 200)
        eta = efficiency_percent(model, grid)
        peak = int(np.argmax(eta))
        print(
            f"  {name}: valid [{lo:g}, {hi:g}] mW, "
            f"peak {eta[peak]:.2f}% at {grid[peak]:.3g} mW"
        )
    print()

    reference = BUILTIN_HARVESTERS["A"]
    lo, hi = reference.valid_range_mw
    powers = np.geomspace(lo, hi, 40)
    rng = np.random.default_rng(SEED)
    noisy = np.clip(
        efficiency_percent(reference, powers) + rng.normal(0.0, NOISE_PP, powers.size),
        0.0,
        100.0,
    )
    samples = [EfficiencySample(float(p), float(e)) for p, e in zip(powers, noisy)]
    fitted = fit_model(samples)

    dense = np.geomspace(lo, hi, 400)
    deviation = np.abs(
        efficiency_percent(fitted, dense) - efficiency_percent(reference, dense)
    )
    print(
        f"refit of model A from 40 samples with {NOISE_PP} pp noise: "
        f"max deviation {deviation.max():.3f} pp over the valid range"
    )

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed, skipping the plot")
        return

    fig, ax = plt.subplots(figsize=(6, 4))
    for name, model in BUILTIN_HARVESTERS.items():
        lo, hi = model.valid_range_mw
        grid = np.geomspace(lo, hi, 400)
        ax.semilogx(grid, efficiency_percent(model, grid), label=f"model {name}")
    ax.set_xlabel("input power (mW)")
    ax.set_ylabel("efficiency (%)")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig("harvester_curves.png", dpi=150)
    print("wrote harvester_curves.png")


if __name__ == "__main__":
    main()
