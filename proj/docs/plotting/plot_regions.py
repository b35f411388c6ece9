"""Shade the monotone and stable parts of a two-equal slice from `cube regions`.

    cube regions --m 1 --slice two-equal --box 0.5,3 --res 200 --out regions.csv
    python3 plot_regions.py regions.csv regions.png
"""
import sys

import matplotlib.pyplot as plt
import pandas as pd

df = pd.read_csv(sys.argv[1], comment="#")
df["monotone"] = (df["monotonicity"] == "strongly_monotone").astype(int)
mono = df.pivot(index="l3", columns="l1", values="monotone")
stable = df.pivot(index="l3", columns="l1", values="stable")
extent = [df.l1.min(), df.l1.max(), df.l3.min(), df.l3.max()]

fig, ax = plt.subplots(figsize=(5, 5))
ax.imshow(mono, origin="lower", extent=extent, cmap="Blues", alpha=0.5, aspect="auto")
ax.contour(stable.columns, stable.index, stable, levels=[0.5], colors="k")
ax.plot(extent[:2], extent[:2], color="gray", linewidth=0.8)
ax.set_xlabel("l1 = l2")
ax.set_ylabel("l3")
fig.tight_layout()
fig.savefig(sys.argv[2] if len(sys.argv) > 2 else "regions.png", dpi=150)
