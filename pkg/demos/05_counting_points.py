"""
Counting solutions of y^2 = x^3 + ax + b modulo p
=================================================

At a prime of good reduction the congruence has p - a_p affine solutions,
and |a_p| <= 2 sqrt(p).
"""

from tauform import CurveSpec, ap_sweep
from tauform.elliptic import count_affine_character, count_affine_naive

E = CurveSpec(1, 0)
print("discriminant", E.discriminant)
for rec in ap_sweep(E, 40):
    print(rec.to_json())

###############################################################################
# Two independent counts: every pair (x, y), or one Legendre symbol per x.

for p in (101, 103, 107):
    print(p, count_affine_naive(-1, 1, p), count_affine_character(-1, 1, p))

###############################################################################
# The distribution of a_p / (2 sqrt p) over many primes.

E = CurveSpec(-1, 1)
ratios = [rec.a_p / (2 * rec.p**0.5) for rec in ap_sweep(E, 2000) if rec.kind == "good"]
print(f"{len(ratios)} good primes, min {min(ratios):+.3f}, max {max(ratios):+.3f}")
