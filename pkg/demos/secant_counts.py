"""How many d-secant (d-2)-planes does a curve have?

Three independent answers: the generating function, the alternating
binomial sum, and a brute-force intersection computation on C^d.
"""
import math

from secantplanes.closed_forms import nd_acgh
from secantplanes.oracle import lemma_coefficients, lemma_expected, porteous_degree
from secantplanes.series import secant_gf

# --- the generating function ---------------------------------------------------

# Rational plane quartic (g=0, m=4): one point, four points on a line,
# three nodes, and no trisecant lines of the rational normal quartic.
print("g=0, m=4:", [int(c) for c in secant_gf(0, 4, 4).coeffs])

# A plane sextic of genus 3 has (5*4)/2 - 3 = 7 nodes.
print("g=3, m=6, d=2:", secant_gf(3, 6, 2)[2], "closed form:", nd_acgh(2, 3, 6))

# --- a small table -------------------------------------------------------------

print()
# m = 2g + 8 keeps every g^{2d-2}_m below non-special for d <= 5
print("N_d(g, 2g+8) for g = 0..6, d = 0..5")
for g in range(7):
    row = secant_gf(g, 2 * g + 8, 5)
    print(f"  g={g}: " + ", ".join(str(c) for c in row.coeffs))

# --- the oracle ----------------------------------------------------------------

print()
for d in range(1, 5):
    p = porteous_degree(d)
    print(f"degree on C^{d}: {p}")
    value = p.evaluate(10, 2)
    print(f"  at g=2, m=10: {value} / {d}! = {value / math.factorial(d)} = N_{d}(2, 10) = {nd_acgh(d, 2, 10)}")

print()
print("linear coefficients (|m|, |gamma|) against the closed forms")
for d in range(2, 6):
    print(f"  d={d}: {tuple(map(int, lemma_coefficients(d)))} vs {tuple(map(int, lemma_expected(d)))}")
