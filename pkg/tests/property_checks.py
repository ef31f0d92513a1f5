"""Randomized property suites, shared between the unit tests (small counts)
and the acceptance run (200 cases each, fixed seeds)."""

from __future__ import annotations

import random

from tritel import (MultiPoly, OrePoly, RatFunc, circulant_matrix, delta,
                    diagonalize_circulant, exists_telescoper, exponent_separation,
                    factor, integer_linear_test, is_summable, lclm,
                    partial_fractions, check_certificate, verify)

import gen


def check_shift_group_action(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        p = gen.rand_poly(rng, nonzero=False)
        s1 = gen.rand_shift(rng, 5)
        s2 = gen.rand_shift(rng, 5)
        s12 = tuple(a + b for a, b in zip(s1, s2))
        assert p.shift(s1).shift(s2) == p.shift(s12)
        assert p.shift((0, 0, 0)) == p
        f = gen.rand_ratfunc(rng)
        assert f.shift(s1).shift(s2) == f.shift(s12)


def check_factor_reconstruction(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        p = gen.rand_poly(rng, max_terms=3, max_deg=1, coeff=3)
        q = gen.rand_poly(rng, max_terms=3, max_deg=1, coeff=3)
        prod = p * q * rng.randint(1, 6)
        if rng.random() < 0.4:
            prod = prod * p
        fac = factor(prod)
        assert fac.value() == prod
        for i in range(len(fac.factors)):
            for j in range(i + 1, len(fac.factors)):
                assert fac.factors[i][0].gcd(fac.factors[j][0]).is_constant()


def check_partial_fraction_reconstruction(seed, n):
    rng = random.Random(seed)
    import tritel.parsing as parsing
    for _ in range(n):
        nfac = rng.randint(1, 3)
        den = MultiPoly.one()
        total_deg = 0
        for _ in range(nfac):
            q = parsing.parse_expr(rng.choice(gen.YZ_FACTOR_POOL)).as_poly()
            if total_deg + q.total_degree() > 4:
                break
            den = den * q ** rng.randint(1, 2)
            total_deg += q.total_degree()
        num = gen.rand_poly(rng, "yz", max_terms=3, max_deg=2, nonzero=False)
        f = RatFunc(num, den)
        for var in ("z", "y"):
            poly_part, terms = partial_fractions(f, var)
            acc = poly_part
            for t in terms:
                assert t.numerator.num.degree(var) < t.factor.degree(var)
                acc = acc + t.value()
            assert acc == f


def check_ore_algebra(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        a = gen.rand_ore(rng, 3)
        b = gen.rand_ore(rng, 3)
        c = gen.rand_ore(rng, 2)
        assert (a * b) * c == a * (b * c)
        f = gen.rand_ratfunc(rng, max_terms=2, max_deg=1)
        assert (a * b).apply(f) == a.apply(b.apply(f))


def check_lclm_divisibility(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        a = gen.rand_ore(rng, 2)
        b = gen.rand_ore(rng, 2)
        m = lclm([a, b])
        assert a.right_divides(m)
        assert b.right_divides(m)
        assert m.order <= a.order + b.order


def check_exponent_separation(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        op = gen.rand_ore(rng, 4)
        m = rng.randint(1, 4)
        sep = exponent_separation(op, m)
        assert sep.total() == op
        for i, part in enumerate(sep.parts):
            assert all(k % m == i for k in part.coeffs)


def check_diagonalize(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        op = gen.rand_ore(rng, 3)
        m = rng.randint(2, 3)
        mat, diag = diagonalize_circulant(op, m)
        prod = mat @ circulant_matrix(op, m)
        for i in range(m):
            for j in range(m):
                if i == j:
                    assert prod.rows[i][j] == diag[i] and not diag[i].is_zero
                else:
                    assert prod.rows[i][j].is_zero
        # every row of the circulant sums to the operator itself
        for row in circulant_matrix(op, m).rows:
            acc = OrePoly.zero()
            for e in row:
                acc = acc + e
            assert acc == op


def check_summability_certificates(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        u = gen.rand_simple_yz(rng)
        v = gen.rand_simple_yz(rng)
        f = delta(u, "y") + delta(v, "z")
        res = is_summable(f)
        assert res.summable
        g, h = res.certificate
        assert check_certificate(f, g, h)
    for _ in range(n // 2):
        f = gen.rand_simple_yz(rng)
        res = is_summable(f)
        if res.summable:
            assert check_certificate(f, *res.certificate)
        sigma = f.shift(gen.rand_shift(rng, 2, "yz"))
        assert is_summable(sigma).summable == res.summable


def check_telescoper_invariants(seed, n):
    rng = random.Random(seed)
    x = RatFunc.variable("x")
    for _ in range(n):
        f = gen.rand_small_trivariate(rng)
        d = exists_telescoper(f)
        # conjugating by an x-shift changes nothing
        assert exists_telescoper(f.shift((rng.randint(-2, 2), 0, 0))).exists == d.exists
        # nonzero Q(x) scaling changes nothing
        phi = gen.rand_coeff_x(rng)
        while phi.is_zero or phi.involves("y") or phi.involves("z"):
            phi = gen.rand_coeff_x(rng)
        assert exists_telescoper(f * phi).exists == d.exists
    for _ in range(max(1, n // 10)):
        f1 = gen.rand_small_trivariate(rng)
        f2 = gen.rand_small_trivariate(rng)
        from tritel import construct_telescoper
        r1 = construct_telescoper(f1, max_order=8)
        r2 = construct_telescoper(f2, max_order=8)
        if r1.witness is None or r2.witness is None:
            continue
        total = exists_telescoper(f1 + f2)
        assert total.exists
        m = lclm([r1.witness[0], r2.witness[0]])
        res = is_summable(m.apply(f1 + f2))
        assert res.summable
        assert verify(m, f1 + f2, *res.certificate)
    for _ in range(n // 4):
        f = gen.rand_ratfunc(rng, "yz")
        d = exists_telescoper(f)
        assert d.exists and d.case in ("XFree", "Summable")
        if d.witness is not None:
            assert verify(d.witness[0], f, d.witness[1], d.witness[2])
