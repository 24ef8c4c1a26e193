"""
Congruences for tau at primes.

Three laws are encoded, each of the shape ``tau(p) = rhs(p) (mod m)``:

    modulus 691, rhs 1 + p^11, p != 691
    modulus 32,  rhs 1 + p^11, p != 2
    modulus 3,   rhs 1 + p,    p != 3

Other moduli can be explored with :func:`find_counterexample_scan`, which
only reports and never asserts anything.
"""

from dataclasses import dataclass

from sympy import primerange

from .report import VerificationReport

__all__ = [
    "CongruenceLaw",
    "LAWS",
    "RHS_FORMS",
    "verify_congruence",
    "find_counterexample_scan",
    "verify_divisor_coherence",
]

RHS_FORMS = {
    "1+p^11": lambda p: 1 + p**11,
    "1+p": lambda p: 1 + p,
}


@dataclass(frozen=True)
class CongruenceLaw:
    name: str
    modulus: int
    rhs_form: str
    excluded_primes: frozenset = frozenset()

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if self.rhs_form not in RHS_FORMS:
            raise ValueError(f"unknown rhs form {self.rhs_form!r}")

    def rhs(self, p):
        return RHS_FORMS[self.rhs_form](p)

    def check(self, p, tau_p):
        lhs = tau_p % self.modulus
        rhs = self.rhs(p) % self.modulus
        return VerificationReport(
            self.name, {"p": p}, lhs, rhs, lhs == rhs, relation="cong", modulus=self.modulus
        )


LAWS = {
    law.name: law
    for law in (
        CongruenceLaw("congruence-691", 691, "1+p^11", frozenset({691})),
        CongruenceLaw("congruence-32", 2**5, "1+p^11", frozenset({2})),
        CongruenceLaw("congruence-3", 3, "1+p", frozenset({3})),
    )
}


def verify_congruence(law, table, p_max=None):
    """One record per prime ``p <= p_max`` (default: the whole table), ascending."""
    if p_max is None:
        p_max = table.max_n
    if p_max > table.max_n:
        raise ValueError(f"table of size {table.max_n} does not cover p <= {p_max}")
    for p in primerange(2, p_max + 1):
        if p in law.excluded_primes:
            continue
        yield law.check(p, table[p])


def find_counterexample_scan(modulus, rhs_form, table, excluded_primes=()):
    """Smallest prime in the table violating ``tau(p) = rhs(p) (mod modulus)``, else None."""
    law = CongruenceLaw("scan", modulus, rhs_form, frozenset(excluded_primes))
    for record in verify_congruence(law, table):
        if not record.passed:
            return record.params["p"]
    return None


def verify_divisor_coherence(table, law=LAWS["congruence-32"], divisors=(2, 4, 8, 16)):
    """Re-check a law modulo each proper divisor of its modulus.

    Agreement mod 32 forces agreement mod every divisor; this reruns the
    reduction explicitly rather than inferring it.
    """
    for d in divisors:
        if law.modulus % d:
            raise ValueError(f"{d} does not divide {law.modulus}")
        sub = CongruenceLaw(f"{law.name}/mod-{d}", d, law.rhs_form, law.excluded_primes)
        yield from verify_congruence(sub, table)
