"""
Matplotlib scripts written next to the CSVs. Nothing is rendered here;
each script reads the CSV in its own directory when run by hand.
"""

import os

_HEADER = '''"""Generated plot script; run from this directory."""
import os

import matplotlib.pyplot as plt
import pandas as pd

HERE = os.path.dirname(os.path.abspath(__file__))
'''

REGION_SCRIPT = _HEADER + '''
frame = pd.read_csv(os.path.join(HERE, "{csv_name}"))
fig, ax = plt.subplots(figsize=(6, 5))
ax.scatter(frame["nu"], frame["b"], c=frame["admissible"].astype(int) + frame["dispersion_like"].astype(int), s=2, cmap="viridis")
ax.axhline(2.0 / 9.0, color="k", lw=0.5, ls="--")
ax.set_xlabel("nu")
ax.set_ylabel("b")
ax.set_title("admissible and dispersion-like regions")
fig.savefig(os.path.join(HERE, "regions.png"), dpi=150)
'''

GAMMA_SCRIPT = _HEADER + '''
frame = pd.read_csv(os.path.join(HERE, "{csv_name}"))
fig, ax = plt.subplots(figsize=(6, 5))
for b, group in frame.groupby("b"):
    ax.plot(group["a"], group["c"], label=f"b = {{b:.4g}}")
ax.set_xlabel("a")
ax.set_ylabel("c")
ax.legend()
fig.savefig(os.path.join(HERE, "gamma.png"), dpi=150)
'''

DIAGNOSTICS_SCRIPT = _HEADER + '''
frame = pd.read_csv(os.path.join(HERE, "{csv_name}"))
fig, axes = plt.subplots(3, 1, figsize=(7, 9), sharex=True)
axes[0].plot(frame["t"], frame["E"] - frame["E"].iloc[0], label="E - E(0)")
axes[0].plot(frame["t"], frame["P"] - frame["P"].iloc[0], label="P - P(0)")
axes[0].legend()
axes[1].plot(frame["t"], frame["H"], label="H")
axes[1].plot(frame["t"], frame["Q"] + frame["SQ"] + frame["NQ"] + frame["dH_correction"], label="dH/dt")
axes[1].legend()
axes[2].semilogy(frame["t"], frame["localH1"], label="local H1")
axes[2].legend()
axes[2].set_xlabel("t")
fig.savefig(os.path.join(HERE, "diagnostics.png"), dpi=150)
'''

DISPERSION_SCRIPT = _HEADER + '''
frame = pd.read_csv(os.path.join(HERE, "{csv_name}"))
fig, axes = plt.subplots(2, 1, figsize=(6, 7), sharex=True)
axes[0].plot(frame["k"], frame["omega"])
axes[0].set_ylabel("omega(k)")
axes[1].plot(frame["k"], frame["abs_group_velocity"])
axes[1].set_ylabel("|omega'(k)|")
axes[1].set_xlabel("k")
fig.savefig(os.path.join(HERE, "dispersion.png"), dpi=150)
'''

SWEEP_SCRIPT = _HEADER + '''
frame = pd.read_csv(os.path.join(HERE, "{csv_name}"))
fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(frame["value"], frame["localH1_ratio"], "o-")
ax.set_xlabel(frame["key"].iloc[0])
ax.set_ylabel("localH1(T) / localH1(0)")
fig.savefig(os.path.join(HERE, "sweep.png"), dpi=150)
'''

PLOT_SCRIPT_DICT = {
    "regions": REGION_SCRIPT,
    "gamma": GAMMA_SCRIPT,
    "diagnostics": DIAGNOSTICS_SCRIPT,
    "dispersion": DISPERSION_SCRIPT,
    "sweep": SWEEP_SCRIPT,
}


def write_plot_script(run_dir, kind, csv_name):
    """Write plot_<kind>.py for csv_name into run_dir; returns the path."""
    path = os.path.join(run_dir, f"plot_{kind}.py")
    with open(path, "w", encoding="utf-8") as f:
        f.write(PLOT_SCRIPT_DICT[kind].format(csv_name=csv_name))
    return path
