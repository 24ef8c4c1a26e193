"""
Truncated formal power series with exact integer coefficients.

A :class:`TruncatedSeries` of order ``N`` stores the coefficients of
``q^0 .. q^N``. Arithmetic between series of different orders truncates
to the smaller one.

Two multiplication kernels share one contract: a schoolbook Cauchy
product, and Kronecker substitution (pack each coefficient vector into a
single big integer, multiply once, unpack). The big-integer product is
delegated to GMP through gmpy2.
"""

from itertools import repeat
from math import comb

import gmpy2

__all__ = [
    "TruncatedSeries",
    "add",
    "mul",
    "pow",
    "eta_power_product",
    "mul_schoolbook",
    "mul_kronecker",
]

# Below this many coefficient products the schoolbook kernel wins.
KRONECKER_THRESHOLD = 2048


class TruncatedSeries:
    """Exact series ``sum(coeffs[i] * q**i for i <= order)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)

    @classmethod
    def _from_list(cls, coeffs):
        s = cls.__new__(cls)
        s._coeffs = tuple(coeffs)
        return s

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def order(self):
        return len(self._coeffs) - 1

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries._from_list(self._coeffs[: order + 1])

    def __getitem__(self, i):
        return self._coeffs[i]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if len(self._coeffs) > 8 else ""
        return f"TruncatedSeries([{head}{more}], order={self.order})"

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return TruncatedSeries._from_list([-c for c in self._coeffs])

    def __sub__(self, other):
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries._from_list([other * c for c in self._coeffs])
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        return pow(self, e)


def add(a, b):
    n = min(a.order, b.order) + 1
    return TruncatedSeries._from_list([x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])])


def _schoolbook(a, b, n):
    """Cauchy product of coefficient lists, truncated to length n."""
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def _pack(coeffs, width, bias):
    # coefficient c occupies `width` little-endian bytes holding c + bias,
    # so every chunk is non-negative
    raw = b"".join(map(int.to_bytes, map(bias.__add__, coeffs), repeat(width), repeat("little")))
    return gmpy2.mpz.from_bytes(raw, "little")


def _bias_constant(length, width, bias):
    chunk = bias.to_bytes(width, "little")
    return gmpy2.mpz.from_bytes(chunk * length, "little")


def _strip(c):
    k = len(c)
    while k and not c[k - 1]:
        k -= 1
    return c[:k]


def _kronecker(a, b, n):
    """Product of coefficient lists truncated to length n, via one big-int multiply."""
    a = _strip(a[:n])
    b = _strip(b[:n])
    if not a or not b:
        return [0] * n
    bound = max(map(abs, a)).bit_length() + max(map(abs, b)).bit_length()
    bound += min(len(a), len(b)).bit_length() + 2
    width = (bound + 7) // 8
    bias = 1 << (8 * width - 1)
    x = _pack(a, width, bias) - _bias_constant(len(a), width, bias)
    y = _pack(b, width, bias) - _bias_constant(len(b), width, bias)
    m = min(len(a) + len(b) - 1, n)
    size = width * m
    # every true coefficient lies in (-bias, bias); terms past m only touch
    # higher chunks, so re-biasing and reducing isolates the low m chunks
    z = gmpy2.f_mod_2exp(x * y + _bias_constant(m, width, bias), 8 * size)
    raw = z.to_bytes(size, "little")
    chunks = map(raw.__getitem__, map(slice, range(0, size, width), range(width, size + width, width)))
    out = list(map((-bias).__add__, map(int.from_bytes, chunks, repeat("little"))))
    out.extend([0] * (n - m))
    return out


def mul_schoolbook(a, b):
    n = min(a.order, b.order) + 1
    return TruncatedSeries._from_list(_schoolbook(a.coeffs, b.coeffs, n))


def mul_kronecker(a, b):
    n = min(a.order, b.order) + 1
    return TruncatedSeries._from_list(_kronecker(list(a.coeffs), list(b.coeffs), n))


def mul(a, b, method="auto"):
    """Truncated Cauchy product of two series.

    ``method`` is ``"schoolbook"``, ``"kronecker"`` or ``"auto"`` (picks by size).
    """
    n = min(a.order, b.order) + 1
    if method == "auto":
        method = "kronecker" if n * n > KRONECKER_THRESHOLD else "schoolbook"
    if method == "schoolbook":
        return mul_schoolbook(a, b)
    if method == "kronecker":
        return mul_kronecker(a, b)
    raise ValueError(f"unknown multiplication method {method!r}")


def pow(a, e, method="auto"):
    """``a**e`` by binary exponentiation; ``pow(a, 0)`` is 1."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = TruncatedSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base, method)
        e >>= 1
        if e:
            base = mul(base, base, method)
    return result


def _sparse_factor(n, exponent, order):
    # (1 - q^n)^exponent, binomially expanded, kept only below q^(order+1)
    return {
        n * j: (-1) ** j * comb(exponent, j)
        for j in range(min(exponent, order // n) + 1)
    }


def _mul_sparse(a, b, order):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            if k <= order:
                out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _densify(node, order):
    if isinstance(node, list):
        return node
    out = [0] * (order + 1)
    for k, v in node.items():
        out[k] = v
    return out


def _combine(a, b, order):
    if isinstance(a, dict) and isinstance(b, dict) and len(a) * len(b) <= 4 * (order + 1):
        c = _mul_sparse(a, b, order)
        if len(c) * 4 <= order + 1:
            return c
        return _densify(c, order)
    n = order + 1
    a = _densify(a, order)
    b = _densify(b, order)
    if n * n > KRONECKER_THRESHOLD:
        return _kronecker(a, b, n)
    return _schoolbook(a, b, n)


def _factor_tree(lo, hi, exponent, order):
    if lo == hi:
        return _sparse_factor(lo, exponent, order)
    mid = (lo + hi) // 2
    left = _factor_tree(lo, mid, exponent, order)
    right = _factor_tree(mid + 1, hi, exponent, order)
    return _combine(left, right, order)


def eta_power_product(exponent, order):
    """``prod_{n=1..order} (1 - q^n)**exponent`` truncated to ``order``.

    Each factor is expanded binomially (it has at most ``exponent + 1``
    terms below the truncation) and the factors are multiplied along a
    balanced tree: sparse products near the leaves, big-integer products
    once the partial results fill up.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    if exponent == 0:
        return TruncatedSeries.one(order)
    node = _factor_tree(1, order, exponent, order)
    return TruncatedSeries._from_list(_densify(node, order))
