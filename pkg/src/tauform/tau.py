"""
Ramanujan's tau function and the weight-12 cusp form Delta.

The table is read off the q-expansion of ``q * prod (1 - q^n)^24``. Everything
else here either extends it (multiplicativity and the prime-power
recursion), checks it (the Deligne bound, the Hecke eigenform identity),
or evaluates Delta as an analytic function on the upper half-plane.
"""

import cmath
import math
from dataclasses import dataclass
from math import gcd

from sympy import factorint, isprime, primerange

from .report import VerificationReport
from .series import eta_power_product, pow as series_pow

__all__ = [
    "TauTable",
    "HeckePolynomial",
    "WeightLevel",
    "MobiusMatrix",
    "ModularityCheck",
    "compute_tau_table",
    "jacobi_cube_tau_table",
    "tau_extended",
    "verify_conjecture_one",
    "verify_deligne_bound",
    "hecke_apply",
    "verify_eigenform",
    "mobius_act",
    "evaluate_delta",
    "truncation_for",
    "modularity_sample",
    "verify_modularity",
    "write_table",
    "read_table",
    "TableFormatError",
]

CONVERGENCE_FLOOR = 0.3
TAIL_BOUND = 1e-18
MODULARITY_TOLERANCE = 1e-9


class TableFormatError(ValueError):
    pass


class TauTable:
    """Exact coefficients ``a(1) .. a(max_n)`` of a q-expansion without constant term.

    For the table of Delta these are the values of tau. Hecke images are
    returned in the same container, since they are q-expansions of the same
    shape.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, values):
        values = [int(v) for v in values]
        if not values:
            raise ValueError("a table needs at least one entry")
        self._coeffs = (0, *values)

    @property
    def max_n(self):
        return len(self._coeffs) - 1

    @property
    def values(self):
        return {n: self._coeffs[n] for n in range(1, len(self._coeffs))}

    def __getitem__(self, n):
        if not 1 <= n <= self.max_n:
            raise KeyError(n)
        return self._coeffs[n]

    def coefficient(self, n):
        """``a(n)`` with ``a(0) = 0``; raises for n beyond the table."""
        if not 0 <= n <= self.max_n:
            raise KeyError(n)
        return self._coeffs[n]

    def truncate(self, max_n):
        if not 1 <= max_n <= self.max_n:
            raise ValueError(f"cannot truncate table of size {self.max_n} to {max_n}")
        return TauTable(self._coeffs[1 : max_n + 1])

    def __len__(self):
        return self.max_n

    def __eq__(self, other):
        if not isinstance(other, TauTable):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        head = ", ".join(f"{n}: {self._coeffs[n]}" for n in range(1, min(self.max_n, 5) + 1))
        return f"TauTable(max_n={self.max_n}, {{{head}{', ...' if self.max_n > 5 else ''}}})"


@dataclass(frozen=True)
class HeckePolynomial:
    """``1 - trace*T + norm*T^2`` for the Hecke eigenvalue at a prime."""

    p: int
    trace: int
    norm: int

    @classmethod
    def for_prime(cls, p, tau_p, weight=12):
        return cls(p, tau_p, p ** (weight - 1))

    @property
    def discriminant(self):
        return self.trace * self.trace - 4 * self.norm

    def inverse_roots(self):
        """The reciprocals alpha, beta of the two roots, as floating complex numbers."""
        disc = complex(self.discriminant)
        sq = cmath.sqrt(disc)
        return (self.trace + sq) / 2, (self.trace - sq) / 2


@dataclass(frozen=True)
class WeightLevel:
    weight: int = 12
    level: int = 1

    def __post_init__(self):
        if self.level != 1:
            raise ValueError("only level 1 is supported")
        if self.weight <= 0 or self.weight % 2:
            raise ValueError("weight must be a positive even integer")


@dataclass(frozen=True)
class MobiusMatrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"{self} does not have determinant 1")

    def automorphy_factor(self, z):
        return self.c * z + self.d


def _shift(eta, max_n):
    # Delta = q * eta^24: a(n) is the coefficient of q^(n-1)
    return TauTable(eta.coeffs[:max_n])


def compute_tau_table(max_n):
    """tau(1) .. tau(max_n) from the product expansion."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    eta = eta_power_product(24, max(max_n - 1, 1))
    table = _shift(eta, max_n)
    assert table[1] == 1
    return table


def jacobi_cube_tau_table(max_n):
    """Independent route to the same table: ``q * (prod (1 - q^n)^3)^8``."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    cube = eta_power_product(3, max(max_n - 1, 1))
    return _shift(series_pow(cube, 8), max_n)


def _prime_power_tau(p, alpha, tau_p, weight=12):
    # tau(p^(a+2)) = tau(p) tau(p^(a+1)) - p^(k-1) tau(p^a)
    norm = p ** (weight - 1)
    prev, cur = 1, tau_p
    if alpha == 0:
        return 1
    for _ in range(alpha - 1):
        prev, cur = cur, tau_p * cur - norm * prev
    return cur


def tau_extended(n, table):
    """tau(n) from tau at primes only, via multiplicativity and the prime-power recursion."""
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    for p, alpha in factorint(n).items():
        if p > table.max_n:
            raise ValueError(f"prime factor {p} of {n} exceeds table coverage {table.max_n}")
        result *= _prime_power_tau(p, alpha, table[p])
    return result


def verify_conjecture_one(table):
    """Multiplicativity on coprime pairs and the prime-power recursion.

    Pairs are unordered (m <= n). The table must come from the expansion,
    not from :func:`tau_extended`.
    """
    N = table.max_n
    for m in range(1, math.isqrt(N) + 1):
        tm = table[m]
        for n in range(m, N // m + 1):
            if gcd(m, n) != 1:
                continue
            lhs = table[m * n]
            rhs = tm * table[n]
            yield VerificationReport("multiplicative", {"m": m, "n": n}, lhs, rhs, lhs == rhs)
    for p in primerange(2, math.isqrt(N) + 1):
        norm = p**11
        alpha = 0
        while p ** (alpha + 2) <= N:
            lhs = table[p ** (alpha + 2)]
            rhs = table[p] * table[p ** (alpha + 1)] - norm * table[p**alpha]
            yield VerificationReport(
                "prime-power-recursion", {"p": p, "alpha": alpha}, lhs, rhs, lhs == rhs
            )
            alpha += 1


def verify_deligne_bound(table):
    """``tau(p)^2 < 4 p^11`` at every prime in range, in exact integers.

    The pass flag also requires the Hecke polynomial's discriminant to be
    negative, i.e. complex-conjugate roots of absolute value ``p^(11/2)``.
    """
    for p in primerange(2, table.max_n + 1):
        poly = HeckePolynomial.for_prime(p, table[p])
        lhs = poly.trace**2
        rhs = 4 * poly.norm
        ok = lhs < rhs and poly.discriminant < 0
        yield VerificationReport("deligne", {"p": p}, lhs, rhs, ok, relation="<")


def hecke_apply(table, p, wl=WeightLevel()):
    """q-expansion of ``T_p f``: ``b(n) = a(pn) + p^(k-1) a(n/p)``.

    The result covers ``n <= max_n // p``.
    """
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    size = table.max_n // p
    if size < 1:
        raise ValueError(f"table of size {table.max_n} too short for T_{p}")
    norm = p ** (wl.weight - 1)
    out = []
    for n in range(1, size + 1):
        b = table[p * n]
        if n % p == 0:
            b += norm * table[n // p]
        out.append(b)
    return TauTable(out)


def verify_eigenform(table, p_max, wl=WeightLevel()):
    """``(T_p Delta)(n) == tau(p) tau(n)`` for primes ``p <= p_max`` and ``pn <= max_n``."""
    for p in primerange(2, min(p_max, table.max_n) + 1):
        image = hecke_apply(table, p, wl)
        eigenvalue = table[p]
        for n in range(1, image.max_n + 1):
            lhs = image[n]
            rhs = eigenvalue * table[n]
            yield VerificationReport("eigenform", {"p": p, "n": n}, lhs, rhs, lhs == rhs)


def mobius_act(g, z):
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("z must lie in the upper half-plane")
    return (g.a * z + g.b) / (g.c * z + g.d)


def truncation_for(z):
    """Smallest N with ``|q|^N < 1e-18`` at z."""
    z = complex(z)
    abs_q = math.exp(-2 * math.pi * z.imag)
    return math.floor(math.log(TAIL_BOUND) / math.log(abs_q)) + 1


def evaluate_delta(z, table):
    """Delta(z) as the truncated Fourier series ``sum tau(n) e^(2 pi i n z)``."""
    z = complex(z)
    if z.imag < CONVERGENCE_FLOOR:
        raise ValueError(f"Im(z) = {z.imag} is below the convergence floor {CONVERGENCE_FLOOR}")
    need = truncation_for(z)
    if table.max_n < need:
        raise ValueError(f"table of size {table.max_n} too short at Im(z) = {z.imag}; need {need}")
    q = cmath.exp(2j * math.pi * z)
    # Horner in q, starting from the highest retained term
    acc = 0j
    for n in range(need, 0, -1):
        acc = acc * q + table[n]
    return acc * q


@dataclass(frozen=True)
class ModularityCheck:
    matrix: MobiusMatrix
    z: complex
    lhs: complex
    rhs: complex
    relative_error: float
    passed: bool


def modularity_sample(points=(1j, 0.5 + 1j, 1 / 3 + 2j), bound=3):
    """Pairs (g, z) with entries of g bounded by ``bound`` and both z, g.z above the floor."""
    rng = range(-bound, bound + 1)
    out = []
    for z in points:
        for a in rng:
            for b in rng:
                for c in rng:
                    for d in rng:
                        if a * d - b * c != 1:
                            continue
                        g = MobiusMatrix(a, b, c, d)
                        if mobius_act(g, z).imag >= CONVERGENCE_FLOOR:
                            out.append((g, complex(z)))
    return out


def verify_modularity(table, sample=None, tolerance=MODULARITY_TOLERANCE):
    """Numerically check ``Delta(g.z) = (cz+d)^12 Delta(z)`` on a sample of (g, z)."""
    if sample is None:
        sample = modularity_sample()
    for g, z in sample:
        lhs = evaluate_delta(mobius_act(g, z), table)
        rhs = g.automorphy_factor(z) ** 12 * evaluate_delta(z, table)
        err = abs(lhs - rhs) / abs(rhs)
        yield ModularityCheck(g, z, lhs, rhs, err, err < tolerance)


TABLE_HEADER = "# tau-table max_n="


def write_table(table, fh):
    fh.write(f"{TABLE_HEADER}{table.max_n}\n")
    for n in range(1, table.max_n + 1):
        fh.write(f"{n}\t{table[n]}\n")


def read_table(fh):
    header = fh.readline().rstrip("\n")
    if not header.startswith(TABLE_HEADER):
        raise TableFormatError(f"bad header {header!r}")
    max_n = int(header[len(TABLE_HEADER):])
    values = []
    for expected, line in enumerate(fh, start=1):
        n, _, value = line.rstrip("\n").partition("\t")
        if int(n) != expected:
            raise TableFormatError(f"line for n={n}, expected n={expected}")
        values.append(int(value))
    if len(values) != max_n:
        raise TableFormatError(f"header says {max_n} entries, found {len(values)}")
    return TauTable(values)
