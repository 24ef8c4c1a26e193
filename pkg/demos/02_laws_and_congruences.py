"""
Checking the laws of tau
========================

Multiplicativity, the prime-power recursion, the bound tau(p)^2 < 4 p^11,
the three explicit congruences, and the Hecke eigenform identity, all as
exact integer sweeps.
"""

from tauform import LAWS, compute_tau_table, verify_congruence
from tauform.congruence import find_counterexample_scan
from tauform.report import count_failures
from tauform.tau import HeckePolynomial, verify_conjecture_one, verify_deligne_bound, verify_eigenform

table = compute_tau_table(3000)

###############################################################################
# Every sweep yields records; a law holds when none of them failed.

for name, sweep in [
    ("multiplicativity + recursion", verify_conjecture_one(table)),
    ("tau(p)^2 < 4p^11", verify_deligne_bound(table)),
    ("eigenform, p <= 30", verify_eigenform(table, 30)),
]:
    reports = list(sweep)
    print(f"{name:32s} {len(reports):7d} checks, {count_failures(reports)} failures")

###############################################################################
# The Hecke polynomial 1 - tau(p) T + p^11 T^2 at p = 2: its inverse roots
# have absolute value 2^(11/2).

poly = HeckePolynomial.for_prime(2, table[2])
alpha, beta = poly.inverse_roots()
print("discriminant", poly.discriminant, "|alpha| =", abs(alpha), "2^5.5 =", 2**5.5)

###############################################################################
# The three congruences.

for law in LAWS.values():
    reports = list(verify_congruence(law, table))
    print(f"{law.name:16s} {len(reports)} primes, {count_failures(reports)} failures")
    print("   ", reports[0].to_json())

###############################################################################
# The same shape of congruence at other moduli is not a law.

for m in (5, 7, 23, 2**11):
    print(f"tau(p) = 1 + p^11 mod {m}: first failure at p =",
          find_counterexample_scan(m, "1+p^11", table))
