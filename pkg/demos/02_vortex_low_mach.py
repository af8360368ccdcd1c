#!/usr/bin/env python3
"""Advecting vortex: Mach-number fields stay the same as eps -> 0.

One period of rotation on a 100x100 grid at three Mach numbers; the run
writes Mach-field CSVs, from which a side-by-side pseudocolour figure is
assembled together with the relative kinetic-energy history.
"""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from apbaro.io_csv import read_csv
from apbaro.runner import RunConfig, run

OUT = os.path.join(os.path.dirname(__file__), "output", "vortex")
EPS = (1e-2, 1e-4, 1e-6)

fig, axes = plt.subplots(1, len(EPS) + 1, figsize=(4.2 * (len(EPS) + 1), 3.6))
for ax, eps in zip(axes, EPS):
    summary = run(RunConfig(case="vortex", eps=eps, outputs=1, outdir=OUT))
    print(f"eps={eps:g}: kinetic ratio {summary['kinetic_ratio']:.6f}, "
          f"{summary['steps']} steps, eta in "
          f"[{summary['eta_min']:.4f}, {summary['eta_max']:.4f}]")
    mach = [f for f in summary["files"] if f.endswith("_mach.csv")][-1]
    _, cols = read_csv(mach)
    n = int(round(len(cols["value"]) ** 0.5))
    M = cols["value"].reshape(n, n)
    im = ax.imshow(M.T, origin="lower", extent=(0, 1, 0, 1), cmap="viridis",
                   vmin=0, vmax=0.014)
    ax.set_title(f"Mach, eps = {eps:g}")

# kinetic-energy history for the last run
diag = [f for f in summary["files"] if f.endswith("_diagnostics.csv")][0]
_, d = read_csv(diag)
axes[-1].plot(d["t"], d["kinetic"] / d["kinetic"][0])
axes[-1].set_xlabel("t")
axes[-1].set_title("relative kinetic energy")
fig.colorbar(im, ax=axes[:len(EPS)].tolist(), shrink=0.85)
fig.savefig(os.path.join(OUT, "vortex_mach.png"), dpi=130)
print("figure:", os.path.join(OUT, "vortex_mach.png"))
