#!/usr/bin/env python3
"""Generate the synthetic benchmark universes in OR-Library portfolio format.

data/synthetic31.txt mimics weekly index-constituent return statistics
from a strong bull market: volatilities 3.5-8.5% per week, a noisy
positive risk premium, one standout earner at moderate volatility, and
a two-factor correlation structure (broad market plus sector tilts).
data/toy3.txt is the tiny uncorrelated universe used in the README
examples.
"""
import random

random.seed(170831)

N = 31
sd = sorted(random.uniform(0.035, 0.085) for _ in range(N))
mu = [0.0020 + 0.050 * s + random.uniform(-0.0012, 0.0012) for s in sd]
mu[8] = 0.0088  # the best earner sits at moderate volatility
market = [random.uniform(0.55, 0.80) for _ in range(N)]
sector = [random.uniform(0.08, 0.42) * (1 if i % 3 else -1) for i in range(N)]

lines = [str(N)]
for i in range(N):
    lines.append(f"{mu[i]:.6f} {sd[i]:.6f}")
for i in range(N):
    for j in range(i, N):
        rho = 1.0 if i == j else market[i] * market[j] + sector[i] * sector[j]
        lines.append(f"{i + 1} {j + 1} {rho:.6f}")

with open("data/synthetic31.txt", "w") as fh:
    fh.write("\n".join(lines) + "\n")

toy = [
    "3",
    "0.100000 0.316228",
    "0.200000 0.316228",
    "0.300000 0.316228",
    "1 1 1.000000",
    "2 2 1.000000",
    "3 3 1.000000",
]
with open("data/toy3.txt", "w") as fh:
    fh.write("\n".join(toy) + "\n")

print("mu range:", min(mu), max(mu), "argmax:", mu.index(max(mu)) + 1)
print("sd of argmax:", sd[mu.index(max(mu))])
print("top-10 mu avg:", sum(sorted(mu)[-10:]) / 10)
