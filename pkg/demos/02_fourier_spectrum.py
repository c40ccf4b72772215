"""Exact Fourier spectra: the fast transform, its oracle, and influences.

Every +-1 function expands as f = sum_S fhat(S) chi_S with chi_S the parity
character of the subset S. The library computes all 2^n coefficients with an
integer butterfly and stores them scaled by 2^n, so nothing is ever rounded.
"""

import numpy as np

from boolfun import (
    coefficient,
    counterexample,
    influence,
    influence_from_spectrum,
    inverse_wht,
    majority,
    naive_expansion,
    wht,
)

maj3 = majority(3)
e3 = wht(maj3)

print("=" * 64)
print("SPECTRUM OF Maj_3")
print("=" * 64)
for mask in range(8):
    c = coefficient(e3, mask)
    if c:
        members = [i + 1 for i in range(3) if mask >> i & 1]
        print(f"  fhat({set(members)}) = {c}")

print()
print("=" * 64)
print("FAST TRANSFORM == NAIVE SUMMATION (independent O(4^n) oracle)")
print("=" * 64)
f = counterexample()
fast = wht(f)
naive = naive_expansion(f)
print(f"  all 32 coefficients agree -> {np.array_equal(fast.scaled, naive.scaled)}")
print(f"  inverse transform recovers the table -> {inverse_wht(fast) == f}")

print()
print("=" * 64)
print("PARSEVAL: sum of squared coefficients is exactly 1")
print("=" * 64)
total = sum(coefficient(fast, s) ** 2 for s in range(f.size))
print(f"  sum_S fhat(S)^2 = {total}")

print()
print("=" * 64)
print("INFLUENCES, TWO WAYS")
print("=" * 64)
print("  Inf_i = Pr[flipping coordinate i changes f]  (flip-count path)")
print("  Inf_i = sum over S containing i of fhat(S)^2 (spectral path)")
for i in range(1, 6):
    by_flip = influence(f, i)
    by_spectrum = influence_from_spectrum(fast, i)
    print(f"  coordinate {i}: {by_flip} == {by_spectrum} -> {by_flip == by_spectrum}")

print()
print("=" * 64)
print("MONOTONE IDENTITY: fhat({i}) = Inf_i for monotone functions")
print("=" * 64)
for name, fn, e in (("Maj_5", majority(5), wht(majority(5))), ("f", f, fast)):
    match = all(
        coefficient(e, 1 << (i - 1)) == influence(fn, i) for i in range(1, 6)
    )
    print(f"  {name}: level-1 coefficients equal influences -> {match}")
