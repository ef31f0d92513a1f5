"""Shift equivalence: stabilizer lattices and shift recovery."""

import random

from tritel import (ShiftVector, find_shift, parse_expr, stabilizer_lattice)
from tritel.shift_equiv import (StabilizerLattice, sigma_x_relation,
                                sigma_xy_relation, sigma_yz_relation)
from tritel.lattice import hermite_rows, lattice_contains

import gen


def P(s):
    return parse_expr(s).as_poly()


def lattice_equal(st: StabilizerLattice, vectors) -> bool:
    return [v.as_tuple() for v in st.basis] == hermite_rows(list(vectors))


class TestStabilizer:
    def test_intro_denominator(self):
        st = stabilizer_lattice(P("x+y+z^2"))
        assert lattice_equal(st, [(1, -1, 0)])

    def test_linear_form(self):
        st = stabilizer_lattice(P("x+y+z"))
        assert lattice_equal(st, [(1, -1, 0), (0, 1, -1)])

    def test_x_free_direction(self):
        st = stabilizer_lattice(P("y^2+z^2"))
        assert lattice_equal(st, [(1, 0, 0)])

    def test_basis_fixes_polynomial(self):
        rng = random.Random(3)
        for _ in range(60):
            p = gen.rand_poly(rng)
            st = stabilizer_lattice(p)
            for v in st.basis:
                assert p.shift(v) == p
            # random small combinations stay inside
            if st.basis:
                combo = ShiftVector(0, 0, 0)
                for v in st.basis:
                    combo = combo + v * rng.randint(-4, 4)
                assert p.shift(combo) == p

    def test_outside_vectors_move_polynomial(self):
        rng = random.Random(4)
        checked = 0
        while checked < 60:
            p = gen.rand_poly(rng)
            st = stabilizer_lattice(p)
            v = gen.rand_shift(rng, 4)
            if lattice_contains([b.as_tuple() for b in st.basis], v):
                continue
            assert p.shift(v) != p
            checked += 1

    def test_stabilizer_is_shift_invariant(self):
        rng = random.Random(5)
        for _ in range(40):
            p = gen.rand_poly(rng)
            s = gen.rand_shift(rng, 3)
            assert stabilizer_lattice(p.shift(s)) == stabilizer_lattice(p)


class TestFindShift:
    def test_paper_pair_full_axes(self):
        v = find_shift(P("y^2+x+2*z"), P("y^2+x-4*y+2*z+7"))
        assert v == ShiftVector(1, -2, 1)

    def test_paper_pair_yz_only(self):
        assert find_shift(P("y^2+x+2*z"), P("y^2+x-4*y+2*z+7"),
                          axes=("y", "z")) is None

    def test_identity(self):
        p = P("x^2+y*z")
        assert find_shift(p, p) == ShiftVector(0, 0, 0)

    def test_roundtrip_random(self):
        rng = random.Random(6)
        for _ in range(60):
            p = gen.rand_poly(rng, max_deg=2, max_terms=4)
            s = gen.rand_shift(rng, 3)
            q = p.shift(s)
            v = find_shift(p, q)
            assert v is not None and p.shift(v) == q

    def test_symmetry(self):
        rng = random.Random(7)
        for _ in range(40):
            p = gen.rand_poly(rng)
            q = p.shift(gen.rand_shift(rng, 3))
            v = find_shift(p, q)
            w = find_shift(q, p)
            assert v is not None and w is not None
            assert q.shift(w) == p

    def test_restricted_support(self):
        rng = random.Random(8)
        for _ in range(40):
            p = gen.rand_poly(rng)
            s = (0, rng.randint(-3, 3), rng.randint(-3, 3))
            v = find_shift(p, p.shift(s), axes=("y", "z"))
            assert v is not None and v.m == 0 and p.shift(v) == p.shift(s)


class TestDerivedRelations:
    def test_sigma_x_relation_of_intro_example(self):
        st = stabilizer_lattice(P("x+y+z^2"))
        assert sigma_x_relation(st) == (1, 1, 0)

    def test_yz_relation(self):
        st = stabilizer_lattice(P("y+z"))
        t, ell = sigma_yz_relation(st)
        assert t == 1
        assert P("y+z").shift((0, t, 0)) == P("y+z").shift((0, 0, ell))

    def test_yz_relation_absent(self):
        assert sigma_yz_relation(stabilizer_lattice(P("y^2+z^2"))) is None

    def test_xy_relation(self):
        assert sigma_xy_relation(stabilizer_lattice(P("x+y")))[0] == 1
        assert sigma_xy_relation(stabilizer_lattice(P("x^2+y^2"))) is None

    def test_relations_are_smallest(self):
        # step-2 relation in x: sigma_x^2 d = sigma_y d
        d = P("x+2*y+z^3")
        m, n, k = sigma_x_relation(stabilizer_lattice(d))
        assert (m, n, k) == (2, 1, 0)
        assert d.shift((m, 0, 0)) == d.shift((0, n, k))
