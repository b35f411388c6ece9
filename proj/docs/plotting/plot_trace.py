"""Plot l1 and l3 against the load for every branch of a `cube trace` CSV.

    cube trace --m 1 --alpha-min 0 --alpha-max 5 --step 0.1 --out trace.csv
    python3 plot_trace.py trace.csv trace.png
"""
import sys

import matplotlib.pyplot as plt
import pandas as pd

df = pd.read_csv(sys.argv[1], comment="#")
fig, ax = plt.subplots(figsize=(6, 4))
for branch, rows in df.groupby("branch"):
    ax.plot(rows["alpha"], rows["l1"], marker=".", label=f"{branch} l1")
    if branch != "radial":
        ax.plot(rows["alpha"], rows["l3"], marker=".", linestyle="--", label=f"{branch} l3")
ax.set_xlabel("alpha")
ax.set_ylabel("stretch")
ax.legend()
fig.tight_layout()
fig.savefig(sys.argv[2] if len(sys.argv) > 2 else "trace.png", dpi=150)
