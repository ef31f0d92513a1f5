"""Summability in y and z: criterion, certificates, additive decomposition."""

import random

import pytest

from tritel import (RatFunc, additive_decomposition, check_certificate, delta,
                    is_summable, parse_expr, solve_shift_difference)

import gen
import property_checks
from oracles import summability_certificate_search


def P(s):
    return parse_expr(s).as_poly()


class TestCriterion:
    def test_linear_form_is_summable(self):
        f = parse_expr("1/(y+z)")
        res = is_summable(f)
        assert res.summable
        assert check_certificate(f, *res.certificate)
        # the paper's certificate shape also verifies
        assert check_certificate(f, parse_expr("y/(y+z)"),
                                 parse_expr("(-y-1)/(y+z)"))
        assert res.witness is not None
        t, ell, p = res.witness
        assert (t, ell) == (1, 1) and p == parse_expr("y")

    def test_higher_powers_are_not(self):
        assert not is_summable(parse_expr("1/(y^2+z^2)")).summable
        assert not is_summable(parse_expr("1/(y^3+z^3)")).summable

    def test_product_of_orbit_members(self):
        f = parse_expr("1/((y+z)*(y+z+1))")
        res = is_summable(f)
        assert res.summable and check_certificate(f, *res.certificate)

    def test_worked_example_layer_over_qx(self):
        f = parse_expr("((y+1)/(x^2+y^2+2*y+1) - y/(x^2+y^2)) * (1/(x+y+z)^2)")
        res = is_summable(f, base="Q(x)")
        assert res.summable and check_certificate(f, *res.certificate)

    def test_base_q_rejects_x(self):
        with pytest.raises(ValueError):
            is_summable(parse_expr("1/(x+y+z)"), base="Q")


class TestAdditiveDecomposition:
    def test_summable_input_empty_residue(self):
        ad = additive_decomposition(parse_expr("1/(y+z)"))
        assert ad.residue == ()

    def test_non_summable_single_fraction(self):
        f = parse_expr("1/(y^2+z^2)")
        ad = additive_decomposition(f)
        assert len(ad.residue) == 1
        frac = ad.residue[0]
        assert frac.denominator == P("y^2+z^2") and frac.power == 1
        assert frac.numerator == RatFunc.one()
        assert ad.g.is_zero and ad.h.is_zero

    def test_orbit_merge_empties_residue(self):
        ad = additive_decomposition(parse_expr("1/((y+z)*(y+z+1))"))
        assert ad.residue == ()

    def test_exact_reconstruction(self):
        rng = random.Random(21)
        for _ in range(30):
            f = gen.rand_simple_yz(rng) + gen.rand_simple_yz(rng)
            ad = additive_decomposition(f)
            total = delta(ad.g, "y") + delta(ad.h, "z")
            for frac in ad.residue:
                total = total + frac.value()
            assert total == f

    def test_residue_fractions_stay_non_summable(self):
        rng = random.Random(22)
        for _ in range(20):
            f = gen.rand_simple_yz(rng)
            ad = additive_decomposition(f)
            for frac in ad.residue:
                assert not is_summable(frac.value()).summable

    def test_multiplicity_preserved(self):
        f = parse_expr("1/(y^2+z^2)^2 + 1/(y^2+z^2)")
        ad = additive_decomposition(f)
        assert sorted(frac.power for frac in ad.residue) == [1, 2]
        # per-layer decisions agree with the whole
        assert not is_summable(f).summable
        assert not is_summable(parse_expr("1/(y^2+z^2)^2")).summable


class TestSolveShiftDifference:
    def test_linear_case(self):
        p = solve_shift_difference(RatFunc.one(), P("y+z"), 1, 1)
        assert p == parse_expr("y")

    def test_zero_numerator(self):
        assert solve_shift_difference(RatFunc.zero(), P("y+z"), 1, 1) == RatFunc.zero()

    def test_roundtrip_constructed(self):
        rng = random.Random(23)
        from tritel.shift_equiv import sigma_yz_relation, stabilizer_lattice
        # factors that do admit a y/z relation, so the precondition holds
        pool = ["y+z", "y+2*z", "2*y+z-1", "y+3*z+2"]
        for _ in range(25):
            d = P(rng.choice(pool))
            t, ell = sigma_yz_relation(stabilizer_lattice(d))
            dz = d.degree("z")
            q = RatFunc.zero()
            zv = RatFunc.variable("z")
            for j in range(dz):
                c = gen.rand_ratfunc(rng, "y", max_terms=2, max_deg=1)
                q = q + c * zv ** j
            a = q.shift((0, t, -ell)) - q
            if a.is_zero:
                continue
            p = solve_shift_difference(a, d, t, ell)
            assert p is not None
            assert p.shift((0, t, -ell)) - p == a

    def test_precondition_reported(self):
        with pytest.raises(ValueError):
            solve_shift_difference(RatFunc.one(), P("y^2+z^2"), 1, 1)
        with pytest.raises(ValueError):
            solve_shift_difference(parse_expr("z^2"), P("y+z"), 1, 1)


class TestInvariants:
    def test_certificate_soundness_and_completeness(self):
        property_checks.check_summability_certificates(205, 20)

    def test_shift_invariance(self):
        rng = random.Random(24)
        for _ in range(15):
            f = gen.rand_simple_yz(rng)
            r = is_summable(f).summable
            assert is_summable(f.shift((0, 1, 0))).summable == r
            assert is_summable(f.shift((0, 0, 1))).summable == r

    def test_oracle_spot_check(self):
        # small instances against the independent certificate search
        fixtures = ["1/(y+z)", "1/(y^2+z^2)", "1/((y+z)*(y+z+2))",
                    "y/(y+z^2)", "(y+1)/(y^2+z^2)^2"]
        for s in fixtures:
            f = parse_expr(s)
            decision = is_summable(f)
            found = summability_certificate_search(f, shift_bound=2, seed=5)
            if found is not None:
                assert decision.summable, s
                g, h = found
                assert check_certificate(f, g, h)
            if decision.summable:
                assert check_certificate(f, *decision.certificate)
