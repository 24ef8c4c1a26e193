"""Ramanujan's tau function, its congruences, and a small p-adic toolkit."""

from .congruence import LAWS, CongruenceLaw, find_counterexample_scan, verify_congruence
from .elliptic import CurveSpec, ReductionData, ap_sweep, reduce_curve
from .padic import (
    IntPolynomial,
    PadicApprox,
    has_root_in_zp,
    hensel_lift,
    is_square_in_qp,
    monic_root_in_qp_reduces_to_zp,
    padic_abs,
    roots_mod_pk,
    vp,
)
from .report import VerificationReport
from .series import TruncatedSeries, eta_power_product
from .tau import (
    MobiusMatrix,
    TauTable,
    WeightLevel,
    compute_tau_table,
    evaluate_delta,
    hecke_apply,
    mobius_act,
    tau_extended,
    verify_conjecture_one,
    verify_deligne_bound,
    verify_eigenform,
)

__version__ = "0.1.0"
