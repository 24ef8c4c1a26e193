"""
Short-Weierstrass curves ``y^2 = x^3 + a x + b`` reduced modulo primes.

Counts are of affine solutions only: a good prime p has ``p - a_p``
solutions (x, y) in F_p x F_p. The point at infinity is not counted, so
the usual projective count is ``affine_count + 1``.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np
from sympy import isprime, primerange

__all__ = [
    "CurveSpec",
    "SingularCurveError",
    "ReductionData",
    "count_affine_naive",
    "count_affine_character",
    "singular_point_mod_p",
    "reduce_curve",
    "ap_sweep",
]

GOOD = "good"
BAD = "bad"


class SingularCurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveSpec:
    a: int
    b: int

    def __post_init__(self):
        if self.discriminant == 0:
            raise SingularCurveError(f"y^2 = x^3 + {self.a}x + {self.b} is singular")

    @property
    def discriminant(self):
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    @classmethod
    def from_rationals(cls, a, b):
        """Clear denominators with the substitution ``(a, b) -> (u^4 a, u^6 b)``."""
        a, b = Fraction(a), Fraction(b)
        u = lcm(a.denominator, b.denominator)
        # u^4 a and u^6 b are integral once u is a multiple of both denominators
        return cls(int(a * u**4), int(b * u**6))

    def twist(self, u):
        """The isomorphic model ``(u^4 a, u^6 b)``."""
        return CurveSpec(u**4 * self.a, u**6 * self.b)


@dataclass(frozen=True)
class ReductionData:
    p: int
    kind: str
    affine_count: int
    a_p: int = None

    def within_hasse(self):
        """``a_p^2 <= 4p`` at a good prime; vacuous at a bad one."""
        return self.kind == BAD or self.a_p * self.a_p <= 4 * self.p

    def to_dict(self):
        out = {"p": self.p, "kind": self.kind, "affine_count": self.affine_count}
        if self.kind == GOOD:
            out["a_p"] = self.a_p
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


_CHUNK = 1 << 22


def count_affine_naive(a, b, p):
    """Check every pair (x, y) in F_p x F_p (vectorized over y, chunked over x)."""
    y2 = np.arange(p, dtype=np.int64) ** 2 % p
    total = 0
    rows = max(1, _CHUNK // p)
    for start in range(0, p, rows):
        x = np.arange(start, min(start + rows, p), dtype=np.int64)
        rhs = (x * x % p * x + (a % p) * x + (b % p)) % p
        total += int(np.count_nonzero(rhs[:, None] == y2[None, :]))
    return total


def count_affine_character(a, b, p):
    """``sum_x (1 + chi(x^3 + a x + b))`` with chi the Legendre symbol (odd p)."""
    if p == 2:
        return count_affine_naive(a, b, p)
    half = (p - 1) // 2
    total = 0
    for x in range(p):
        c = (x * x * x + a * x + b) % p
        if c == 0:
            total += 1
        elif pow(c, half, p) == 1:
            total += 2
    return total


def singular_point_mod_p(a, b, p):
    """A point of the reduced curve where both partial derivatives vanish, or None."""
    for x in range(p):
        if (3 * x * x + a) % p:
            continue
        for y in range(p):
            if (2 * y) % p == 0 and (y * y - x**3 - a * x - b) % p == 0:
                return (x, y)
    return None


def reduce_curve(E, p):
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    count = count_affine_naive(E.a, E.b, p)
    if E.discriminant % p == 0:
        return ReductionData(p, BAD, count)
    return ReductionData(p, GOOD, count, p - count)


def ap_sweep(E, p_max):
    """Reduction data at every prime ``p <= p_max``, ascending.

    Raises AssertionError if a good prime breaks ``a_p^2 <= 4p``.
    """
    for p in primerange(2, p_max + 1):
        rec = reduce_curve(E, p)
        if not rec.within_hasse():
            raise AssertionError(f"a_{p} = {rec.a_p} violates a_p^2 <= 4p")
        yield rec
