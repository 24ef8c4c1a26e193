"""
Roots over Q_p
==============

x^2 - 2 has no root modulo 5, hence none in Z_5, hence none in Q_5 (a root
of a monic integer polynomial cannot have negative valuation). Modulo 7
it has the simple roots 3 and 4, which Hensel's lemma lifts to roots in Z_7.
"""

from fractions import Fraction

from tauform import (
    IntPolynomial,
    has_root_in_zp,
    hensel_lift,
    is_square_in_qp,
    monic_root_in_qp_reduces_to_zp,
    padic_abs,
    roots_mod_pk,
    vp,
)

f = IntPolynomial.parse("-2,0,1")

###############################################################################
# The table of alpha^2 - 2 modulo 5.

def centred(x, m=5):
    return (x + m // 2) % m - m // 2


for alpha in (0, 1, 2, -2, -1):
    print(alpha, centred(alpha**2), centred(alpha**2 - 2))
print("roots mod 5:", roots_mod_pk(f, 5, 1))

###############################################################################
# Valuations and absolute values.

print(vp(5, 50), padic_abs(5, 50), vp(2, Fraction(3, 8)), padic_abs(5, Fraction(1, 5)))

###############################################################################
# Certificates.

print(monic_root_in_qp_reduces_to_zp(f, 5).to_dict())
print(has_root_in_zp(f, 5).to_json())
cert = has_root_in_zp(f, 7, witness_precision=10)
print(cert.to_json(), "check:", cert.check())
for k in range(1, 6):
    print(k, hensel_lift(f, 7, 3, k), hensel_lift(f, 7, 4, k))

###############################################################################
# Squares in Q_p.

for a, p in [(2, 5), (2, 7), (2, 2), (17, 2), (Fraction(-7, 9), 2)]:
    print(a, p, is_square_in_qp(a, p).to_json())
