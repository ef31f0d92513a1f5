"""Seeded random generators shared by the property suites."""

from __future__ import annotations

from fractions import Fraction

from tritel import MultiPoly, OrePoly, RatFunc, parse_expr

VAR_SLOT = {"x": 0, "y": 1, "z": 2}


def rand_poly(rng, variables="xyz", max_terms=4, max_deg=2, coeff=4,
              nonzero=True) -> MultiPoly:
    while True:
        d = {}
        for _ in range(rng.randint(1, max_terms)):
            e = [0, 0, 0]
            for v in variables:
                e[VAR_SLOT[v]] = rng.randint(0, max_deg)
            c = rng.randint(-coeff, coeff)
            if c:
                d[tuple(e)] = d.get(tuple(e), 0) + c
        p = MultiPoly.from_dict({e: c for e, c in d.items() if c})
        if not (nonzero and p.is_zero):
            return p


def rand_ratfunc(rng, variables="xyz", max_terms=3, max_deg=2) -> RatFunc:
    num = rand_poly(rng, variables, max_terms, max_deg, nonzero=False)
    den = rand_poly(rng, variables, max_terms, max_deg)
    return RatFunc(num, den)


def rand_shift(rng, bound=3, variables="xyz"):
    s = [0, 0, 0]
    for v in variables:
        s[VAR_SLOT[v]] = rng.randint(-bound, bound)
    return tuple(s)


def rand_coeff_x(rng) -> RatFunc:
    """Small rational function of x alone."""
    pool = ["1", "2", "-1", "x", "x+1", "x-2", "2*x+1", "1/2", "x^2"]
    num = parse_expr(rng.choice(pool))
    if rng.random() < 0.3:
        den = parse_expr(rng.choice(["x", "x+1", "x+3"]))
        return num / den
    return num


def rand_ore(rng, max_order=3, nonzero=True) -> OrePoly:
    while True:
        coeffs = {}
        for k in range(max_order + 1):
            if rng.random() < 0.6:
                c = rand_coeff_x(rng)
                if not c.is_zero:
                    coeffs[k] = c
        op = OrePoly(coeffs)
        if not (nonzero and op.is_zero):
            return op


# irreducible bivariate denominators, kept small on purpose
YZ_FACTOR_POOL = ["y+z", "y+z+1", "y+2*z", "2*y+z-1", "y^2+z^2", "y+z^2",
                  "y^2+z+1", "y*z+1"]

XYZ_FACTOR_POOL = ["x+y+z", "x+y+z^2", "x+2*y+z", "y^2+z^2+x", "x+y", "x+2*y",
                   "(x+y)^2+z^2", "x^2+y^2"]


def rand_simple_yz(rng, power_max=2) -> RatFunc:
    q = parse_expr(rng.choice(YZ_FACTOR_POOL)).as_poly()
    m = rng.randint(1, power_max)
    num = rand_poly(rng, "yz", max_terms=2, max_deg=1, coeff=3, nonzero=True)
    return RatFunc(num) / RatFunc(q) ** m


def rand_small_trivariate(rng) -> RatFunc:
    q = parse_expr(rng.choice(XYZ_FACTOR_POOL)).as_poly()
    m = rng.randint(1, 2)
    num = rand_poly(rng, "xyz", max_terms=2, max_deg=1, coeff=3, nonzero=True)
    return RatFunc(num) / RatFunc(q) ** m
