import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import verdict_agrees
from tauform.padic import (
    EnumerationBudgetError,
    IntPolynomial,
    PadicApprox,
    PrecisionLoss,
    SingularRootError,
    has_root_in_zp,
    hensel_lift,
    is_square_in_qp,
    monic_root_in_qp_reduces_to_zp,
    padic_abs,
    roots_mod_pk,
    vp,
)

X2_MINUS_2 = IntPolynomial([-2, 0, 1])
primes = st.sampled_from([2, 3, 5, 7, 11, 13])
nonzero_rationals = st.fractions(max_denominator=10**6).filter(lambda x: x != 0)


class TestValuation:
    def test_fifty(self):
        assert vp(5, 50) == 2

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 691])
    def test_one(self, p):
        assert vp(p, 1) == 0

    def test_denominator(self):
        assert vp(2, Fraction(3, 8)) == -3

    def test_zero_raises(self):
        with pytest.raises(ValueError):
            vp(3, 0)

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            vp(6, 12)

    @given(primes, nonzero_rationals, nonzero_rationals)
    def test_multiplicative(self, p, x, y):
        assert vp(p, x * y) == vp(p, x) + vp(p, y)

    @given(primes, st.integers(1, 10**9))
    def test_units(self, p, u):
        assume(u % p)
        assert vp(p, u) == 0 and vp(p, p * u) == 1


class TestAbs:
    def test_fifty(self):
        assert padic_abs(5, 50) == Fraction(1, 25)

    def test_zero(self):
        assert padic_abs(7, 0) == 0

    def test_fifth(self):
        assert padic_abs(5, Fraction(1, 5)) == 5

    @given(primes, st.fractions(max_denominator=10**4), st.fractions(max_denominator=10**4))
    def test_ultrametric(self, p, x, y):
        ax, ay, axy = padic_abs(p, x), padic_abs(p, y), padic_abs(p, x + y)
        assert axy <= max(ax, ay)
        if ax != ay:
            assert axy == max(ax, ay)


class TestPolynomial:
    def test_parse(self):
        assert IntPolynomial.parse("-2,0,1") == X2_MINUS_2
        assert X2_MINUS_2.to_text() == "-2,0,1"

    def test_parse_error(self):
        with pytest.raises(ValueError):
            IntPolynomial.parse("1,x")

    def test_trailing_zeros_dropped(self):
        assert IntPolynomial([1, 2, 0, 0]).degree == 1

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            IntPolynomial([0, 0])

    def test_eval_and_derivative(self):
        f = IntPolynomial([5, -3, 0, 2])
        assert f(2) == 5 - 6 + 16
        assert f.derivative() == IntPolynomial([-3, 0, 6])
        assert f.eval_mod(2, 7) == 15 % 7
        assert IntPolynomial([4]).derivative()(10) == 0


class TestRootsModPk:
    def test_no_square_root_of_2_mod_5(self):
        assert roots_mod_pk(X2_MINUS_2, 5, 1) == set()

    def test_mod_5_table_values(self):
        # alpha^2 - 2 for alpha = 0, 1, 2, -2, -1 is -2, -1, 2, 2, -1 mod 5
        table = [(0, -2), (1, -1), (2, 2), (-2, 2), (-1, -1)]
        assert all((X2_MINUS_2(a) - v) % 5 == 0 for a, v in table)

    def test_mod_7(self):
        assert roots_mod_pk(X2_MINUS_2, 7, 1) == {3, 4}

    def test_x2_minus_1_mod_2(self):
        assert roots_mod_pk(IntPolynomial([-1, 0, 1]), 2, 1) == {1}

    def test_large_coefficients(self):
        f = IntPolynomial([-(10**30) - 2, 0, 10**20 * 7 + 1])
        brute = {r for r in range(49) if f(r) % 49 == 0}
        assert roots_mod_pk(f, 7, 2) == brute

    def test_budget(self):
        with pytest.raises(EnumerationBudgetError):
            roots_mod_pk(X2_MINUS_2, 7, 9)
        with pytest.raises(EnumerationBudgetError):
            roots_mod_pk(X2_MINUS_2, 2, 5, budget=16)

    @settings(max_examples=50)
    @given(st.lists(st.integers(-50, 50), min_size=2, max_size=5), st.sampled_from([2, 3, 5]), st.integers(1, 3))
    def test_matches_python_loop(self, coeffs, p, k):
        assume(coeffs[-1])
        f = IntPolynomial(coeffs)
        assert roots_mod_pk(f, p, k) == {r for r in range(p**k) if f(r) % p**k == 0}


class TestHensel:
    def test_sqrt2_mod_49(self):
        assert hensel_lift(X2_MINUS_2, 7, 3, 2) == 10

    def test_conjugate(self):
        assert hensel_lift(X2_MINUS_2, 7, 4, 2) == 39

    @pytest.mark.parametrize("p,c,k", [(5, 123456789, 7), (2, -3, 10), (13, 4, 1)])
    def test_linear(self, p, c, k):
        assert hensel_lift(IntPolynomial([-c, 1]), p, c % p, k) == c % p**k

    def test_singular_rejected(self):
        with pytest.raises(SingularRootError):
            hensel_lift(IntPolynomial([0, 0, 1]), 5, 0, 3)

    def test_not_a_root(self):
        with pytest.raises(ValueError):
            hensel_lift(X2_MINUS_2, 7, 2, 3)

    @pytest.mark.parametrize("k", range(1, 21))
    def test_witness_valid_every_precision(self, k):
        w = hensel_lift(X2_MINUS_2, 7, 3, k)
        assert (w * w - 2) % 7**k == 0 and w % 7 == 3 and 0 <= w < 7**k

    @settings(max_examples=80)
    @given(
        st.lists(st.integers(-30, 30), min_size=2, max_size=5),
        st.sampled_from([3, 5, 7, 11]),
        st.integers(1, 12),
    )
    def test_unique_lift(self, coeffs, p, k):
        assume(coeffs[-1])
        f = IntPolynomial(coeffs)
        df = f.derivative()
        simple = [r for r in range(p) if f(r) % p == 0 and df(r) % p]
        for r in simple:
            w = hensel_lift(f, p, r, k)
            assert f(w) % p**k == 0 and w % p == r
            if p**k <= 5000:
                matches = [x for x in roots_mod_pk(f, p, k) if x % p == r]
                assert matches == [w]


class TestHasRoot:
    def test_x2_minus_2_over_q5(self):
        cert = has_root_in_zp(X2_MINUS_2, 5)
        assert cert.verdict == "certified-no" and cert.precision == 1
        assert cert.check()

    def test_x2_minus_2_over_q7(self):
        cert = has_root_in_zp(X2_MINUS_2, 7, witness_precision=10)
        assert cert.verdict == "certified-yes" and cert.witness % 7 == 3
        assert cert.precision == 10 and (cert.witness**2 - 2) % 7**10 == 0
        assert cert.check()

    def test_x_squared_exact_zero(self):
        cert = has_root_in_zp(IntPolynomial([0, 0, 1]), 5)
        assert cert.verdict == "certified-yes" and cert.exact and cert.witness == 0

    def test_singular_escalation(self):
        # x^2 - 17 over Z_2: root 1 is singular mod 2, but v(f(1)) = 4 > 2 v(f'(1)) = 2
        cert = has_root_in_zp(IntPolynomial([-17, 0, 1]), 2, effort=6)
        assert cert.verdict == "certified-yes"
        assert (cert.witness**2 - 17) % 2**cert.precision == 0

    def test_x2_minus_3_over_z2(self):
        # 3 is not 1 mod 8: no roots mod 8
        cert = has_root_in_zp(IntPolynomial([-3, 0, 1]), 2, effort=5)
        assert cert.verdict == "certified-no" and cert.precision == 2

    def test_inconclusive(self):
        # x^2 - 2*5^6 has no root in Z_5, but x = 0 mod 5^3 solves it mod 5^k for k <= 6,
        # and every such root is singular
        cert = has_root_in_zp(IntPolynomial([-50 * 625, 0, 1]), 5, effort=3)
        assert cert.verdict == "inconclusive" and not cert.conclusive

    def test_json(self):
        cert = has_root_in_zp(X2_MINUS_2, 5)
        d = json.loads(cert.to_json())
        assert d["verdict"] == "certified-no" and d["precision"] == 1 and d["poly"] == "-2,0,1"

    def test_agreement_small_corpus(self):
        for coeffs in itertools.product(range(-4, 5), repeat=2):
            f = IntPolynomial([*coeffs, 1])
            for p in (2, 3, 5):
                cert = has_root_in_zp(f, p, effort=3)
                assert verdict_agrees(cert, f, p, 3, roots_mod_pk) is None, (f, p)
                assert cert.check()


class TestMonicReduction:
    def test_x2_minus_2(self):
        cert = monic_root_in_qp_reduces_to_zp(X2_MINUS_2, 5)
        assert cert.margins == {0: 2} and cert.check()

    def test_linear(self):
        assert monic_root_in_qp_reduces_to_zp(IntPolynomial([-1, 1]), 3).check()

    def test_x3_minus_p(self):
        cert = monic_root_in_qp_reduces_to_zp(IntPolynomial([-7, 0, 0, 1]), 7)
        assert cert.margins == {0: 4} and cert.check()

    def test_non_monic(self):
        with pytest.raises(ValueError):
            monic_root_in_qp_reduces_to_zp(IntPolynomial([1, 2]), 3)

    def test_tampered_certificate(self):
        cert = monic_root_in_qp_reduces_to_zp(X2_MINUS_2, 5)
        bad = type(cert)(cert.p, cert.poly, cert.degree, {0: 5})
        assert not bad.check()

    @given(st.lists(st.integers(-100, 100), max_size=4), primes, st.integers(-6, -1), st.integers(1, 50))
    def test_negative_valuation_never_root(self, low, p, v, unit):
        assume(unit % p)
        f = IntPolynomial([*low, 1])
        assert monic_root_in_qp_reduces_to_zp(f, p).check()
        x = Fraction(unit) * Fraction(p) ** v
        value = sum(Fraction(c) * x**i for i, c in enumerate(f.coeffs))
        assert value != 0
        assert vp(p, value) == f.degree * v


class TestSquares:
    def test_2_mod_5(self):
        cert = is_square_in_qp(2, 5)
        assert not cert.is_square and cert.reason == "non-residue"

    def test_2_mod_7(self):
        cert = is_square_in_qp(2, 7)
        assert cert.is_square and cert.witness % 7 == 3 and cert.check()

    def test_2_at_2(self):
        cert = is_square_in_qp(2, 2)
        assert not cert.is_square and cert.reason == "odd-valuation"

    def test_17_at_2(self):
        cert = is_square_in_qp(17, 2, precision=12)
        assert cert.is_square and cert.check()

    def test_rational(self):
        cert = is_square_in_qp(Fraction(9, 4) * 7, 7)
        assert not cert.is_square
        cert = is_square_in_qp(Fraction(4, 49) * 2, 7)
        assert cert.is_square and cert.check()

    def test_zero(self):
        with pytest.raises(ValueError):
            is_square_in_qp(0, 3)

    @given(nonzero_rationals, nonzero_rationals, primes)
    def test_square_class(self, a, b, p):
        assert is_square_in_qp(a * b * b, p).is_square == is_square_in_qp(a, p).is_square

    @given(nonzero_rationals, primes)
    def test_witness(self, a, p):
        cert = is_square_in_qp(a, p, precision=8)
        assert cert.check()

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_units_against_enumeration(self, p):
        # u is a square in Z_p iff x^2 = u has roots mod p^3 (mod 8 for p = 2)
        k = 3
        for u in range(1, p**k):
            if u % p == 0:
                continue
            brute = bool(roots_mod_pk(IntPolynomial([-u, 0, 1]), p, k))
            assert is_square_in_qp(u, p).is_square == brute, u


class TestPadicApprox:
    def test_from_rational(self):
        x = PadicApprox.from_rational(5, 50, 3)
        assert (x.valuation, x.unit, x.precision) == (2, 2, 3)
        assert x.norm() == Fraction(1, 25)

    def test_invalid_unit(self):
        with pytest.raises(ValueError):
            PadicApprox(5, 0, 10, 2)
        with pytest.raises(ValueError):
            PadicApprox(5, 0, 3, 0)

    def test_zero(self):
        z = PadicApprox.zero(3)
        x = PadicApprox.from_rational(3, 7, 4)
        assert (z + x) == x and (x * z).is_zero

    def test_precision_loss(self):
        x = PadicApprox.from_rational(5, 3, 2)
        y = PadicApprox.from_rational(5, 28, 2)
        with pytest.raises(PrecisionLoss):
            x - (y - PadicApprox.from_rational(5, 25, 2))

    def test_addition_loses_digits(self):
        # 1 + 24 = 25 known mod 5^3 only gives relative precision 1
        s = PadicApprox.from_rational(5, 1, 3) + PadicApprox.from_rational(5, 24, 3)
        assert (s.valuation, s.precision, s.unit) == (2, 1, 1)

    def test_mixed_primes(self):
        with pytest.raises(ValueError):
            PadicApprox.from_rational(3, 1, 2) * PadicApprox.from_rational(5, 1, 2)

    @given(primes, nonzero_rationals, nonzero_rationals, nonzero_rationals, st.integers(1, 6))
    def test_mul_associative_and_exact(self, p, x, y, z, k):
        X, Y, Z = (PadicApprox.from_rational(p, t, k) for t in (x, y, z))
        assert (X * Y) * Z == X * (Y * Z)
        assert (X * Y).valuation == X.valuation + Y.valuation
        assert (X * Y).congruent_to(x * y)

    @given(primes, nonzero_rationals, nonzero_rationals, st.integers(1, 6), st.integers(1, 6))
    def test_add_never_overclaims(self, p, x, y, k1, k2):
        X = PadicApprox.from_rational(p, x, k1)
        Y = PadicApprox.from_rational(p, y, k2)
        try:
            S = X + Y
        except PrecisionLoss:
            return
        assert S.absolute_precision <= min(X.absolute_precision, Y.absolute_precision)
        assume(x + y != 0)
        assert S.congruent_to(x + y)
