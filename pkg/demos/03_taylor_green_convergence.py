#!/usr/bin/env python3
"""Vorticity convergence on the steady incompressible flow with an exact
solution: refinement study at eps = 0.01, T = 2 (first-order trend)."""

import os

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from apbaro.runner import convergence_study

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

rows = convergence_study(meshes=(16, 32, 64), eps=0.01, t_final=2.0)
print(f"{'mesh':>6} {'L1':>10} {'rate':>8} {'L2':>10} {'rate':>8} {'Linf':>10} {'rate':>8}")
for r in rows:
    print(f"{r['mesh']:>6} {r['L1']:>10.6f} {r.get('rate_L1', float('nan')):>8.3f} "
          f"{r['L2']:>10.6f} {r.get('rate_L2', float('nan')):>8.3f} "
          f"{r['Linf']:>10.6f} {r.get('rate_Linf', float('nan')):>8.3f}")

meshes = [r["mesh"] for r in rows]
plt.figure(figsize=(4.5, 3.6))
for norm in ("L1", "L2", "Linf"):
    plt.loglog(meshes, [r[norm] for r in rows], "o-", label=norm)
plt.loglog(meshes, [rows[0]["L1"] * meshes[0] / m for m in meshes], "k--",
           label="first order")
plt.xlabel("cells per axis")
plt.ylabel("relative vorticity error")
plt.legend()
plt.tight_layout()
plt.savefig(os.path.join(OUT, "taylor_green_convergence.png"), dpi=130)
print("figure:", os.path.join(OUT, "taylor_green_convergence.png"))
