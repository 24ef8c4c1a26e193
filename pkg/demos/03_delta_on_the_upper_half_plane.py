"""
Delta as a function of z
========================

With q = exp(2 pi i z), Delta is a holomorphic function on the upper
half-plane satisfying Delta(g.z) = (cz + d)^12 Delta(z) for g in SL2(Z).
"""

from tauform import MobiusMatrix, compute_tau_table, evaluate_delta, mobius_act
from tauform.tau import verify_modularity

table = compute_tau_table(200)

###############################################################################
# At z = i the value is real and positive; shifting by 1 changes nothing.

print("Delta(i)     =", evaluate_delta(1j, table))
print("Delta(i + 1) =", evaluate_delta(1 + 1j, table))

###############################################################################
# The inversion z -> -1/z at z = 2i.

S = MobiusMatrix(0, -1, 1, 0)
z = 2j
lhs = evaluate_delta(mobius_act(S, z), table)
rhs = S.automorphy_factor(z) ** 12 * evaluate_delta(z, table)
print("Delta(-1/2i) =", lhs)
print("(2i)^12 Delta(2i) =", rhs)

###############################################################################
# A whole sample of matrices with entries up to 3 in absolute value.

checks = list(verify_modularity(table))
worst = max(checks, key=lambda c: c.relative_error)
print(f"{len(checks)} checks, worst relative error {worst.relative_error:.2e} at {worst.matrix}, z={worst.z}")
