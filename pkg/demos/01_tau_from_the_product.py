"""
Expanding Delta and reading off tau
===================================

Delta(q) = q * prod_{n>=1} (1 - q^n)^24. We expand the product, shift by
one power of q, and look at the coefficients.
"""

import time

from tauform import compute_tau_table, eta_power_product, tau_extended
from tauform.series import pow as series_pow
from tauform.tau import jacobi_cube_tau_table

###############################################################################
# The first few factors already fix the low-order coefficients.

print(eta_power_product(24, 4))

###############################################################################
# A full table. The expansion multiplies the binomially expanded factors
# along a balanced tree, switching to big-integer products when the
# partial results become dense.

start = time.perf_counter()
table = compute_tau_table(2000)
print(f"tau(1..2000) in {time.perf_counter() - start:.2f}s")
print({n: table[n] for n in range(1, 11)})

###############################################################################
# Jacobi's cube gives a second route: (prod (1 - q^n)^3)^8.

print("cube route agrees:", jacobi_cube_tau_table(2000) == table)
cube = eta_power_product(3, 12)
print("prod (1-q^n)^3 =", cube.coeffs)
print("its 8th power  =", series_pow(cube, 8).coeffs[:6])

###############################################################################
# tau at composite n is determined by tau at primes.

for n in (4, 6, 12, 1024, 2 * 3 * 5 * 7):
    print(n, tau_extended(n, table), table[n] if n <= table.max_n else "")
