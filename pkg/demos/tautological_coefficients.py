"""The r = 1 coefficients P_alpha, P_beta, P_c by three routes.

For a one-parameter family of g^{2d-1}_m's, the number of fibres with a
d-secant (d-2)-plane is P_alpha alpha + P_beta beta + P_c c.  Each
coefficient is computed from the test-family relations, from terminating
3F2 sums, and from generating functions.
"""
from secantplanes.closed_forms import p_alpha, p_beta, p_c, tautological_coefficients

d, g, m = 2, 9, 10
for name, routes in tautological_coefficients(d, g, m).items():
    print(name, {k: str(v) for k, v in routes.items()})

# renormalizing the family leaves the count unchanged
s = 2 * d - 1
print("2m Pa + (2g-2) Pb + (s+1) Pc =",
      2 * m * p_alpha(d, g, m) + (2 * g - 2) * p_beta(d, g, m) + (s + 1) * p_c(d, g, m))

# where some route is undefined it is simply missing
print()
print("d=1, g=0, m=5:", {k: sorted(v) for k, v in tautological_coefficients(1, 0, 5).items()})
print("d=3, g=4, m=6:", {k: sorted(v) for k, v in tautological_coefficients(3, 4, 6).items()})

# small table along s = 2d - 1, g = 2d + 3
print()
print(" d   g   m       P_alpha      P_beta        P_c")
for d in range(1, 6):
    g = 2 * d + 3
    for m in (g, g + 2):
        print(f"{d:2d} {g:3d} {m:3d} {str(p_alpha(d, g, m)):>13} {str(p_beta(d, g, m)):>11} {str(p_c(d, g, m)):>10}")
