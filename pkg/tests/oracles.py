"""Brute-force reference computations, deliberately independent of tauform."""


def naive_eta_power(exponent, order):
    """prod (1 - q^n)^exponent to q^order, one linear factor at a time."""
    c = [1] + [0] * order
    for n in range(1, order + 1):
        for _ in range(exponent):
            for i in range(order, n - 1, -1):
                c[i] -= c[i - n]
    return c


def naive_tau(max_n):
    c = naive_eta_power(24, max_n - 1)
    return {n: c[n - 1] for n in range(1, max_n + 1)}


def naive_affine_count(a, b, p):
    return sum(1 for x in range(p) for y in range(p) if (y * y - x**3 - a * x - b) % p == 0)


def is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def verdict_agrees(cert, f, p, levels, enumerate_roots):
    """Compare a root certificate against exhaustive root sets mod p^1 .. p^levels.

    ``enumerate_roots(f, p, k)`` is the brute-force enumerator. Returns an
    error string, or None when the certificate is consistent.
    """
    sets = {k: enumerate_roots(f, p, k) for k in range(1, levels + 1)}
    empty = [k for k, s in sets.items() if not s]
    if empty:
        if cert.verdict != "certified-no" or cert.precision != empty[0]:
            return f"expected certified-no at {empty[0]}, got {cert.verdict}@{cert.precision}"
        return None
    if cert.verdict == "certified-no":
        return "certified-no although roots exist at every level"
    if cert.verdict == "certified-yes":
        top = levels if cert.exact else min(levels, cert.precision)
        for k in range(1, top + 1):
            if cert.witness % p**k not in sets[k]:
                return f"witness {cert.witness} is not a root mod {p}^{k}"
    return None
