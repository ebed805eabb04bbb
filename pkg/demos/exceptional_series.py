"""Linear series with exceptional secant planes on a general curve.

With rho = 1 and mu = -1 the count N' is finite.  Along the family
g = 2ad+1, m = (a+1)(2d-1)+1, s = 2d-1 it vanishes exactly when a = 1
or d = 1 and is positive otherwise.
"""
from secantplanes.closed_forms import (
    RhoOneParams,
    SecantParams,
    nd_acgh,
    nprime_asymptotic_defect,
    nprime_general,
    nprime_r1,
)

print("N'(a, d)")
for a in range(1, 5):
    print(f"  a={a}:", [int(nprime_r1(RhoOneParams(a, d))) for d in range(1, 6)])

# the same numbers from the general linear formula in A and A'
p = RhoOneParams(2, 3)
sp = p.secant_params()
A, Ap = nd_acgh(sp.d, sp.g, sp.m), nd_acgh(sp.d + 1, sp.g, sp.m + 1)
print()
print(f"a=2, d=3: g={sp.g}, m={sp.m}, s={sp.s}, A={A}, A'={Ap}")
print("  finite sums:", nprime_r1(p), " linear formula:", nprime_general(sp, A, Ap))

# a case with r = 2, where A and A' have to come from elsewhere
q = SecantParams(d=3, r=2, s=2, g=7, m=7)
print()
print(f"r=2, d=3, s=2, g=7, m=7 (rho={q.rho}, mu={q.mu}):",
      f"N' = {nprime_general(q, 1, 0)} A + {nprime_general(q, 0, 1)} A'")

# --- growth of the remainder ------------------------------------------------------

# N'/F - (4a-4)d^2 - (-4a^2+2a+2)d is not bounded: it grows like (4a^2-5a)d.
print()
for a in (2, 3, 4):
    row = []
    for d in (5, 10, 20, 30):
        e = nprime_asymptotic_defect(RhoOneParams(a, d))
        row.append(f"d={d}: {float(e):8.2f} ({float(e / d):.3f} d)")
    print(f"a={a}:", "  ".join(row), f"  4a^2-5a = {4 * a * a - 5 * a}")
