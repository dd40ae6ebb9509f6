"""Generates data/experiment_synthetic.csv.

A synthetic stand-in for a measured capacitor-voltage capture: a 5 V step
from a 0.2 V baseline with 0.2 ms of pre-trigger, sampled at 1 MHz, plus
small seeded Gaussian noise. Damping and damped frequency are chosen to match
an overshoot of about 0.7125 and a first peak near 0.3157 ms.
"""

import math
import random
from pathlib import Path

XI = 0.10729
OMEGA_D = 9951.196
BASELINE = 0.2
STEP = 5.0
PRE_TRIGGER = 200e-6
DT = 1e-6
T_END = 6e-3
NOISE = 1e-3
SEED = 20240611


def response(t: float) -> float:
    if t <= 0.0:
        return 0.0
    omega0 = OMEGA_D / math.sqrt(1.0 - XI * XI)
    k = XI / math.sqrt(1.0 - XI * XI)
    decay = math.exp(-XI * omega0 * t)
    return 1.0 - decay * (math.cos(OMEGA_D * t) + k * math.sin(OMEGA_D * t))


def main() -> None:
    rng = random.Random(SEED)
    out = Path(__file__).resolve().parent.parent / "data" / "experiment_synthetic.csv"
    n = int(round(T_END / DT)) + 1
    lines = [
        "# synthetic capture (not measured): xi=0.10729, omega_d=9951.196 rad/s",
        "# 5 V step on a 0.2 V baseline, trigger at 0.2 ms, 1 MHz sampling",
        "t,v",
    ]
    for i in range(n):
        t = i * DT
        v = BASELINE + STEP * response(t - PRE_TRIGGER) + rng.gauss(0.0, NOISE)
        lines.append(f"{t:.7g},{v:.6f}")
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
