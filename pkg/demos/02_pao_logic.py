"""Logic on the pole-to-pole axis.

Only the z-projection alpha = cos(theta/2) of a qubit matters here. The
converted value mu = 1 - alpha orders states from |0> (mu = 0) to |1>
(mu = 1), and AND/OR become min/max by mu, much like fuzzy logic.

    python demos/02_pao_logic.py
"""

import math

from quboip import KET0, KET1, from_angles, mu_of, pao_and, pao_not, pao_or, pao_xor, quantum_convert, z_projection

name = {KET0: "|0>", KET1: "|1>"}

print("psi1 psi2  AND  OR   XOR  NOT1 NOT2")
for a in (KET0, KET1):
    for b in (KET0, KET1):
        cells = [pao_and(a, b), pao_or(a, b), pao_xor(a, b), pao_not(a), pao_not(b)]
        print(f"{name[a]}  {name[b]}  " + "  ".join(name[c] for c in cells))

# The converters: alpha -> mu classically, |0> - |psi> on the quantum side.
for q in (KET0, KET1):
    print(f"{name[q]}: alpha={z_projection(q):.0f} mu={mu_of(q):.0f} quantum_convert={quantum_convert(q)}")

# Beyond basis states, min/max still pick one of the operands.
north, south = from_angles(math.pi / 3, 0.4), from_angles(2 * math.pi / 3, 1.9)
print(f"mu(pi/3) = {mu_of(north):.4f}, mu(2pi/3) = {mu_of(south):.4f}")
print("AND picks pi/3:", pao_and(north, south) is north)
print("OR picks 2pi/3:", pao_or(north, south) is south)
