"""
Acceptance criteria 1-11.  All arithmetic is exact, so every comparison is
equality; each criterion also asserts its runtime bound.

Run with ``pytest tests/test_acceptance.py -v`` (the lines appear in the
terminal summary) or directly as a script; either way one ``PASS``/``FAIL``
line per criterion is printed.
"""

import sys
import time
from math import factorial

import sympy

from hessring import gkm, suites
from hessring.hessenberg import enumerate_hn, fixed_points
from hessring.polyring import hilbert_series, is_regular_sequence
from hessring.presentation import (appendix_identity_check, b_symmetry_check, f,
                                   fixed_point_vanishing, hilbert_closed_form,
                                   ideal_Icheck, ideal_J, t_zero_check)
from hessring.symfunc import betti_from_xg, chromatic_qsym, expand_in_schur, sw_trivial_coeff

H4 = list(enumerate_hn(4))
H5 = list(enumerate_hn(5))

# collected for the terminal summary (see conftest.py)
LINES: list[str] = []


def report(number: int, title: str, ok: bool, elapsed: float, bound: float, note: str = ""):
    status = "PASS" if ok and elapsed < bound else "FAIL"
    line = f"criterion {number:2d}: {status}  {title}  ({elapsed:.2f}s / {bound:g}s){note}"
    LINES.append(line)
    print(line)
    return status == "PASS"


def timed(fn):
    start = time.perf_counter()
    ok, note = fn()
    return ok, note, time.perf_counter() - start


def run_criterion(number, title, bound, fn):
    ok, note, elapsed = timed(fn)
    assert report(number, title, ok, elapsed, bound, note), f"criterion {number} failed: {note}"


# -- 1 -----------------------------------------------------------------------

def _c1():
    x1, x2, x3, x4, t = sympy.symbols("x1 x2 x3 x4 t")
    xs = [x1, x2, x3, x4]

    def p(i):
        return sum(xs[k - 1] - k * t for k in range(1, i + 1))

    shown = {
        (2, 1): (x1 - x2 - t) * p(1),
        (3, 2): (x1 - x2 - t) * p(1) + (x2 - x3 - t) * p(2),
        (4, 3): (x1 - x2 - t) * p(1) + (x2 - x3 - t) * p(2) + (x3 - x4 - t) * p(3),
        (3, 1): (x1 - x3 - t) * (x1 - x2 - t) * p(1),
        (4, 2): (x1 - x3 - t) * (x1 - x2 - t) * p(1)
        + (x2 - x4 - t) * ((x1 - x2 - t) * p(1) + (x2 - x3 - t) * p(2)),
        (4, 1): (x1 - x4 - t) * (x1 - x3 - t) * (x1 - x2 - t) * p(1),
    }
    names = dict(zip(["x1", "x2", "x3", "x4", "t"], [x1, x2, x3, x4, t]))
    bad = []
    for (i, j), expr in shown.items():
        ours = f(i, j, 4)
        expected = sympy.Poly(sympy.expand(expr), x1, x2, x3, x4, t)
        got = {e: sympy.Rational(c) for e, c in ours.terms.items()}
        want = {e: c for e, c in expected.terms()}
        assert [names[n] for n in ours.ring.names] == [x1, x2, x3, x4, t]
        if got != want:
            bad.append((i, j))
    return not bad, f"  mismatches={bad}" if bad else "  7/7 polynomials"


def test_criterion_1_example_polynomials():
    run_criterion(1, "n=4 example f-polynomials, term-for-term", 1, _c1)


# -- 2 -----------------------------------------------------------------------

def _c2():
    results = [t_zero_check(n) for n in range(1, 7)]
    return all(r.ok for r in results), f"  pairs={sum(r.checked for r in results)}"


def test_criterion_2_t_zero_specialization():
    run_criterion(2, "t=0 specialization, n<=6", 5, _c2)


# -- 3 -----------------------------------------------------------------------

def _c3():
    results = [fixed_point_vanishing(h) for h in H5]
    bad = [f for r in results for f in r.failures]
    return not bad, f"  h={len(H5)} evaluations={sum(r.checked for r in results)} counterexamples={len(bad)}"


def test_criterion_3_fixed_point_vanishing():
    run_criterion(3, "fixed-point vanishing over H_5", 30, _c3)


# -- 4 -----------------------------------------------------------------------

def _c4():
    bad = []
    for h in H4 + H5:
        closed = hilbert_closed_form(h)
        top = closed.degree() + 2
        lin = hilbert_series(ideal_Icheck(h), top)
        via_j = hilbert_series(ideal_J(h), top)
        if not (lin == via_j == closed):
            bad.append(str(h))
    return not bad, f"  h={len(H4) + len(H5)} (all of H_4 and H_5) bad={bad}"


def test_criterion_4_three_route_hilbert():
    run_criterion(4, "three-route Hilbert series", 300, _c4)


# -- 5 -----------------------------------------------------------------------

def _c5():
    bad = [str(h) for h in H4 if not is_regular_sequence(ideal_Icheck(h))]
    return not bad, f"  h={len(H4)} bad={bad}"


def test_criterion_5_regular_sequence():
    run_criterion(5, "regular-sequence certification, H_4", 60, _c5)


# -- 6 -----------------------------------------------------------------------

def _c6():
    results = [appendix_identity_check(n) for n in range(1, 6)]
    results += [b_symmetry_check(n) for n in range(1, 6)]
    return all(r.ok for r in results), f"  cases={sum(r.checked for r in results)}"


def test_criterion_6_appendix_identity():
    run_criterion(6, "appendix identity and b-symmetry, n<=5", 60, _c6)


# -- 7 -----------------------------------------------------------------------

def _c7():
    witnesses = {str(h): w for h in H4 if (w := suites.check_gkm(h)) is not None}
    return not witnesses, f"  h={len(H4)} failures={witnesses}"


def test_criterion_7_gkm_suite():
    run_criterion(7, "GKM suite, H_4 exhaustive", 120, _c7)


# -- 8 -----------------------------------------------------------------------

def _c8():
    bad = []
    for h in H5:
        trivial = expand_in_schur(chromatic_qsym(h)).coeff((1,) * 5)
        if trivial != sw_trivial_coeff(h) or trivial.stretch(2) != hilbert_closed_form(h):
            bad.append(str(h))
    return not bad, f"  h={len(H5)} bad={bad}"


def test_criterion_8_trivial_coefficient():
    run_criterion(8, "s_(1^n) coefficient of X_G vs product and Hilbert series, H_5", 180, _c8)


# -- 9 -----------------------------------------------------------------------

def _c9():
    bad = []
    for h in H5:
        xg = betti_from_xg(h)
        if xg != gkm.poincare_polynomial(h) or xg(1) != factorial(5):
            bad.append(str(h))
    return not bad, f"  h={len(H5)} bad={bad}"


def test_criterion_9_betti_cross_validation():
    run_criterion(9, "Betti numbers: X_G route vs inv_h route, H_5", 180, _c9)


# -- 10 ----------------------------------------------------------------------

def _c10():
    out = suites.mbirika_tymoczko_distinction()
    ok = (out["x3_nonzero"] and out["x3_square_zero"] and out["anisotropic"]
          and out["Icheck_deg2_dim"] == 2 and out["Icheck_deg4_dim"] == 1)
    return ok, f"  form={out['form']} disc={out['discriminant']}"


def test_criterion_10_mbirika_tymoczko():
    run_criterion(10, "J_h vs Icheck_h distinction at h=(2,3,3)", 1, _c10)


# -- 11 ----------------------------------------------------------------------

def _c11():
    bad = [str(h) for h in H5 if len(fixed_points(h)) != hilbert_closed_form(h)(1)]
    return not bad, f"  h={len(H5)} bad={bad}"


def test_criterion_11_fixed_point_count():
    run_criterion(11, "|fixed points| = Hilbert series at s=1, H_5", 10, _c11)


if __name__ == "__main__":
    tests = sorted((v for k, v in globals().items() if k.startswith("test_criterion_")),
                   key=lambda fn: int(fn.__name__.split("_")[2]))
    failures = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
