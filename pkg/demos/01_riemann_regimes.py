#!/usr/bin/env python3
"""1D Riemann suite across flow regimes.

Runs the 200-cell Riemann problem at eps = 0.8 (compressible), 0.05 (weakly
compressible) and 0.001 (nearly incompressible), writes the usual CSV
artifacts, and saves a quick density/momentum overlay against the explicit
Rusanov reference.
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import apbaro as ap
from apbaro.cases import get_case
from apbaro.io_csv import read_csv
from apbaro.reference import ConservedState, run_rusanov
from apbaro.runner import RunConfig, run

OUT = os.path.join(os.path.dirname(__file__), "output", "riemann")
EPS = (0.8, 0.05, 0.001)

case = get_case("riemann_1d")
fig, axes = plt.subplots(2, len(EPS), figsize=(4 * len(EPS), 6), sharex=True)

for col, eps in enumerate(EPS):
    summary = run(RunConfig(case="riemann_1d", eps=eps, outputs=2, outdir=OUT))
    print(f"eps={eps:g}: {summary['steps']} steps, "
          f"acoustic Courant {summary['max_acoustic_courant']:.1f}, "
          f"entropy monotone: {summary['entropy_monotone']}")
    final = [f for f in summary["files"] if f.endswith("_t0.05.csv")][0]
    _, cols = read_csv(final)

    # fine-mesh explicit reference for the same data
    grid = ap.build_grid(1, 500, case.extents)
    rho0 = case.rho0(eps)(grid.cell_centers()[0])
    q0 = rho0 * case.u0(eps)[0](grid.cell_centers()[0])
    params = ap.SchemeParams(epsilon=eps, gamma=case.gamma, dt_max=1.0)
    ref = run_rusanov(grid, ConservedState(rho=rho0, mom=[q0]), 0.05, params)
    xr = grid.cell_centers()[0]

    axes[0, col].plot(xr, ref.state.rho, "k-", lw=0.8, label="Rusanov 1/500")
    axes[0, col].plot(cols["x"], cols["rho"], "r.", ms=2.5, label="semi-implicit")
    axes[0, col].set_title(f"eps = {eps:g}")
    axes[1, col].plot(xr, ref.state.mom[0], "k-", lw=0.8)
    axes[1, col].plot(cols["x"], cols["q"], "r.", ms=2.5)

axes[0, 0].set_ylabel("density")
axes[1, 0].set_ylabel("momentum")
axes[0, 0].legend(fontsize=8)
fig.tight_layout()
fig.savefig(os.path.join(OUT, "riemann_overview.png"), dpi=130)
print("figure:", os.path.join(OUT, "riemann_overview.png"))
