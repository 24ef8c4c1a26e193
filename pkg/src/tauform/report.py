"""Verification records shared by every sweep, and their JSON-lines form."""

import json
from dataclasses import dataclass

__all__ = ["VerificationReport", "dump_reports", "load_reports", "count_failures"]

_RELATIONS = ("==", "<", "<=", "cong")


@dataclass(frozen=True)
class VerificationReport:
    """One checked instance of a law.

    ``relation`` says how ``lhs`` and ``rhs`` are compared: exact equality,
    strict or weak inequality, or congruence modulo ``modulus`` (in which
    case both sides are stored as least non-negative residues).
    """

    law: str
    params: dict
    lhs: int
    rhs: int
    passed: bool
    relation: str = "=="
    modulus: int = None

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.relation == "cong" and not self.modulus:
            raise ValueError("congruence records need a modulus")

    def recheck(self):
        """Recompute the pass flag from the stored sides."""
        if self.relation == "==":
            return self.lhs == self.rhs
        if self.relation == "<":
            return self.lhs < self.rhs
        if self.relation == "<=":
            return self.lhs <= self.rhs
        return (self.lhs - self.rhs) % self.modulus == 0

    def to_dict(self):
        if self.relation == "cong" and set(self.params) == {"p"}:
            return {
                "law": self.law,
                "p": str(self.params["p"]),
                "lhs_residue": str(self.lhs),
                "rhs_residue": str(self.rhs),
                "modulus": str(self.modulus),
                "pass": self.passed,
            }
        out = {"law": self.law}
        out.update({k: str(v) for k, v in self.params.items()})
        out["relation"] = self.relation
        out["lhs"] = str(self.lhs)
        out["rhs"] = str(self.rhs)
        if self.modulus is not None:
            out["modulus"] = str(self.modulus)
        out["pass"] = self.passed
        return out

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        law = d.pop("law")
        passed = d.pop("pass")
        if "lhs_residue" in d:
            return cls(
                law=law,
                params={"p": int(d["p"])},
                lhs=int(d["lhs_residue"]),
                rhs=int(d["rhs_residue"]),
                passed=passed,
                relation="cong",
                modulus=int(d["modulus"]),
            )
        relation = d.pop("relation")
        lhs = int(d.pop("lhs"))
        rhs = int(d.pop("rhs"))
        modulus = d.pop("modulus", None)
        params = {k: int(v) for k, v in d.items()}
        return cls(
            law=law,
            params=params,
            lhs=lhs,
            rhs=rhs,
            passed=passed,
            relation=relation,
            modulus=None if modulus is None else int(modulus),
        )

    @classmethod
    def from_json(cls, line):
        return cls.from_dict(json.loads(line))


def dump_reports(reports, fh):
    """Write reports as JSON lines; returns the number of failures."""
    failures = 0
    for r in reports:
        fh.write(r.to_json() + "\n")
        failures += not r.passed
    return failures


def load_reports(fh):
    return [VerificationReport.from_json(line) for line in fh if line.strip()]


def count_failures(reports):
    return sum(1 for r in reports if not r.passed)
