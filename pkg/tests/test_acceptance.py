"""Acceptance suite: reproduces the worked examples exactly and runs the
randomized property and oracle-agreement suites, printing one pass line per
criterion (run with `pytest tests/test_acceptance.py -v -s`)."""

import json
import random
import time

from tritel import (OrePoly, RatFunc, check_certificate, construct_telescoper,
                    delta, exists_telescoper, is_summable, parse_expr,
                    parse_operator, verify, find_shift, stabilizer_lattice,
                    ShiftVector)
from tritel.cli import main as cli_main
from tritel.lattice import hermite_rows

import gen
import property_checks
from oracles import summability_certificate_search, telescoper_witness_search

Sx = OrePoly.sx()

WORKED_3 = "(x*y+x*z+y^2+y*z+1)/((x+y)*((x+y)^2+z^2))"
WORKED_4 = ("(x^4+2*x^2*y^2+y^4+x^3+3*y*x^2+y^3-x*y^2+x^2-x*y)"
            "/((x+y)*(x^2+y^2+2*y+1)*(x^2+y^2)*(x+y+z)^2)")
NEGATIVE = "1/((x+2*y)*(x+y+z^2))"


def _report(num, elapsed, budget, detail=""):
    extra = f"; {detail}" if detail else ""
    print(f"criterion {num}: PASS ({elapsed:.2f}s of {budget:.0f}s budget{extra})")


def _cli_json(capsys, *argv):
    code = cli_main(list(argv) + ["--json"])
    doc = json.loads(capsys.readouterr().out)
    return code, doc


def test_criterion_1_summability_fixtures(capsys):
    t0 = time.perf_counter()
    code, doc = _cli_json(capsys, "summable", "1/(y+z)")
    assert code == 0 and doc["summable"] is True
    f = parse_expr("1/(y+z)")
    g = parse_expr(doc["certificate"]["g"])
    h = parse_expr(doc["certificate"]["h"])
    assert check_certificate(f, g, h)
    t1 = time.perf_counter()
    assert t1 - t0 < 1.0
    elapsed = t1 - t0
    for n in (2, 3):
        t0 = time.perf_counter()
        code, doc = _cli_json(capsys, "summable", f"1/(y^{n}+z^{n})")
        assert code == 0 and doc["summable"] is False
        t1 = time.perf_counter()
        assert t1 - t0 < 1.0
        elapsed = max(elapsed, t1 - t0)
    with capsys.disabled():
        _report(1, elapsed, 1, "max over the three fixtures")


def test_criterion_2_intro_example(capsys):
    t0 = time.perf_counter()
    code, doc = _cli_json(capsys, "telescope", "1/(x+y+z^2)", "--construct")
    assert code == 0
    assert doc["exists"] is True and doc["verified"] is True
    L = OrePoly(parse_operator(doc["witness"]["L"]))
    f = parse_expr("1/(x+y+z^2)")
    assert verify(L, f, parse_expr(doc["witness"]["g"]),
                  parse_expr(doc["witness"]["h"]))
    assert verify(Sx - 1, f, f, RatFunc.zero())
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    with capsys.disabled():
        _report(2, elapsed, 1, f"L = {doc['witness']['L']}")


def test_criterion_3_worked_example_quadratic_orbit(capsys):
    t0 = time.perf_counter()
    f = parse_expr(WORKED_3)
    decision = exists_telescoper(f)
    assert decision.exists
    out = construct_telescoper(f)
    L, g, h = out.witness
    assert verify(L, f, g, h)
    paper_op = (Sx - 1) ** 2
    res = is_summable(paper_op.apply(f))
    assert res.summable
    assert verify(paper_op, f, *res.certificate)
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    with capsys.disabled():
        _report(3, elapsed, 5, "(Sx - 1)^2 verified")


def test_criterion_4_worked_example_degree_four(capsys):
    t0 = time.perf_counter()
    f = parse_expr(WORKED_4)
    decision = exists_telescoper(f)
    assert decision.exists
    assert any("layers summable: 1:yes" in n.detail for n in decision.notes)
    res = is_summable((Sx - 1).apply(f))
    assert res.summable
    assert verify(Sx - 1, f, *res.certificate)
    # the inner bivariate part the paper isolates is summable on its own
    inner = parse_expr("((y+1)/(x^2+y^2+2*y+1) - y/(x^2+y^2)) * (1/(x+y+z)^2)")
    assert is_summable(inner).summable
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    with capsys.disabled():
        _report(4, elapsed, 5, "Sx - 1 verified, inner layer summable")


def test_criterion_5_negative_instance(capsys):
    t0 = time.perf_counter()
    f = parse_expr(NEGATIVE)
    decision = exists_telescoper(f)
    assert not decision.exists
    assert decision.case == "Suff1-NonZero"
    out = construct_telescoper(f)
    assert out.witness is None and out.reason == "nonexistent"
    assert not telescoper_witness_search(f, max_order=3, shift_bound=3)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    with capsys.disabled():
        _report(5, elapsed, 30, "no witness up to order 3, shift bound 3")


def test_criterion_6_shift_equivalence_fixtures(capsys):
    t0 = time.perf_counter()
    p = parse_expr("y^2+x+2*z").as_poly()
    q = parse_expr("y^2+x-4*y+2*z+7").as_poly()
    assert find_shift(p, q) == ShiftVector(1, -2, 1)
    assert find_shift(p, q, axes=("y", "z")) is None
    st = stabilizer_lattice(parse_expr("x+y+z^2").as_poly())
    assert [v.as_tuple() for v in st.basis] == hermite_rows([(1, -1, 0)])
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    with capsys.disabled():
        _report(6, elapsed, 1)


def test_criterion_7_property_suites(capsys):
    suites = [
        ("shift group action", property_checks.check_shift_group_action, 701),
        ("factor reconstruction", property_checks.check_factor_reconstruction, 702),
        ("partial fractions", property_checks.check_partial_fraction_reconstruction, 703),
        ("ore associativity/apply", property_checks.check_ore_algebra, 704),
        ("lclm divisibility", property_checks.check_lclm_divisibility, 705),
        ("exponent separation", property_checks.check_exponent_separation, 706),
        ("diagonalization", property_checks.check_diagonalize, 707),
        ("summability certificates", property_checks.check_summability_certificates, 708),
        ("telescoper invariants", property_checks.check_telescoper_invariants, 709),
    ]
    t0 = time.perf_counter()
    for name, fn, seed in suites:
        t1 = time.perf_counter()
        fn(seed, 200)
        with capsys.disabled():
            print(f"  suite [{name}]: 200 cases ok ({time.perf_counter()-t1:.1f}s)")
    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0
    with capsys.disabled():
        _report(7, elapsed, 300, "9 suites x 200 cases")


def _oracle_instance(rng):
    kind = rng.random()
    if kind < 0.45:
        return _shaped_certificate_delta(rng)
    if kind < 0.75:
        return gen.rand_simple_yz(rng), False
    f = RatFunc.zero()
    for _ in range(2):
        q = parse_expr(rng.choice(gen.YZ_FACTOR_POOL)).as_poly()
        num = gen.rand_poly(rng, "yz", max_terms=2, max_deg=1, coeff=3)
        f = f + RatFunc(num) / RatFunc(q)
    return f, False


def _shaped_certificate_delta(rng):
    """delta_y(u) + delta_z(v) with u, v inside the oracle's candidate class."""
    def shaped(var):
        q = parse_expr(rng.choice(gen.YZ_FACTOR_POOL)).as_poly()
        dy, dz = max(q.degree("y"), 0), max(q.degree("z"), 0)
        ey = rng.randint(0, dy if dy else 2)
        ez = rng.randint(0, dz - 1 if dz else 2)
        num = RatFunc(gen.rand_poly(rng, "", 1, 0, 3)) * \
            RatFunc.variable("y") ** ey * RatFunc.variable("z") ** ez
        s = rng.randint(-1, 1)
        shift = (0, s, 0) if var == "y" else (0, 0, s)
        return num / RatFunc(q.shift(shift))
    u, v = shaped("y"), shaped("z")
    return delta(u, "y") + delta(v, "z"), True


def test_criterion_8_oracle_equivalence(capsys):
    rng = random.Random(808)
    t0 = time.perf_counter()
    n_true = n_false = n_oracle_found = 0
    disagreements = []
    for i in range(50):
        f, constructed = _oracle_instance(rng)
        if f.is_zero:
            f = parse_expr("1/(y+z)")
        decision = is_summable(f)
        if decision.summable:
            n_true += 1
            g, h = decision.certificate
            assert check_certificate(f, g, h)
        else:
            n_false += 1
        found = summability_certificate_search(f, shift_bound=3, seed=900 + i)
        if found is not None:
            n_oracle_found += 1
            g, h = found
            assert check_certificate(f, g, h)
            if not decision.summable:
                disagreements.append(str(f))
        if constructed:
            assert decision.summable
            assert found is not None, f"oracle missed a constructed certificate: {f}"
    assert disagreements == []
    elapsed = time.perf_counter() - t0
    assert elapsed < 600.0
    with capsys.disabled():
        _report(8, elapsed, 600,
                f"50 instances: {n_true} summable / {n_false} not, "
                f"oracle certificates {n_oracle_found}, 0 disagreements")
