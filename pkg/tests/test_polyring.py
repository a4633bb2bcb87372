from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hessring.hessenberg import HessFn
from hessring.polyring import (AmbientMismatch, GradedPiece, MPoly, NotDivisible,
                               PolyRing, UniPoly, complete_h, divide_linear,
                               elementary, hilbert_product, hilbert_series,
                               is_regular_sequence, is_symmetric_in,
                               monomials_of_degree, newton_check, power_sum,
                               quotient_graded_dim)
from hessring.presentation import b, ideal_Icheck, ideal_J

R = PolyRing.x_ring(3)
x1, x2, x3, t = R.gens()
Q3 = PolyRing.x_only(3)


def to_sympy(p: MPoly):
    syms = sympy.symbols(p.ring.names)
    return sympy.expand(sum(sympy.Rational(c) * sympy.Mul(*(s ** a for s, a in zip(syms, e)))
                            for e, c in p.terms.items()))


small_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 4),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=4,
).map(lambda terms: MPoly(R, terms))


def test_basic_arithmetic():
    assert x1 * x1 == MPoly(R, {(2, 0, 0, 0): 1})
    assert (x1 * x1).degree() == 4
    assert (x1 - x2) + (x2 - x3) == x1 - x3
    assert 0 * (x1 + t) == R.zero
    assert (x1 + 1) ** 2 == x1 * x1 + 2 * x1 + 1
    assert R.zero.degree() == -1


def test_no_stored_zeros():
    p = MPoly(R, {(1, 0, 0, 0): 0, (0, 1, 0, 0): Fraction(2, 1)})
    assert list(p.terms) == [(0, 1, 0, 0)]
    assert isinstance(p.terms[(0, 1, 0, 0)], int)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        x1 + Q3["x1"]


def test_display_format():
    assert str(x1 * x1 - x1 * x2 - x1 * t) == "x1^2 - x1*x2 - x1*t"
    assert str(Fraction(1, 2) * x1 - 3) == "1/2*x1 - 3"
    assert str(R.zero) == "0"


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b_, c):
    assert (a * b_) * c == a * (b_ * c)
    assert a * (b_ + c) == a * b_ + a * c
    assert a + b_ == b_ + a
    assert a - a == R.zero


@settings(max_examples=40, deadline=None)
@given(small_polys, small_polys)
def test_multiplication_matches_sympy(a, b_):
    assert to_sympy(a * b_) == sympy.expand(to_sympy(a) * to_sympy(b_))


def test_substitute_examples():
    p1 = x1 - t
    assert p1.substitute({"x1": t, "t": t}) == R.zero
    f21 = (x1 - x2 - t) * (x1 - t)
    assert f21.substitute({"t": 0}, Q3) == Q3["x1"] * (Q3["x1"] - Q3["x2"])
    assert (x1 * x2).substitute({"x1": 2, "x2": 3, "x3": 0, "t": 0}).constant_value() == 6


def test_substitute_missing_assignment():
    with pytest.raises(KeyError):
        (x1 * t).substitute({"x1": 1}, PolyRing.univariate("s"))


@settings(max_examples=40, deadline=None)
@given(small_polys, st.integers(-3, 3), st.integers(-3, 3))
def test_substitute_is_homomorphism(a, u, v):
    point = {"x1": u, "x2": v, "x3": u - v, "t": 1}
    sq = (a * a).substitute(point).constant_value()
    assert sq == a.substitute(point).constant_value() ** 2


def test_symmetric_polynomials():
    ys = Q3.gens()
    assert elementary(0, ys) == 1
    assert elementary(2, ys) == ys[0] * ys[1] + ys[0] * ys[2] + ys[1] * ys[2]
    assert elementary(4, ys) == Q3.zero
    assert power_sum(2, ys[:2]) == ys[0] ** 2 + ys[1] ** 2
    assert complete_h(0, ys) == 1
    assert complete_h(2, ys[:2]) == ys[0] ** 2 + ys[0] * ys[1] + ys[1] ** 2
    assert elementary(2, [1, 2, 3]) == 11


@pytest.mark.parametrize("m", range(1, 6))
def test_newton_identity(m):
    for q in range(1, m + 1):
        assert newton_check(q, m)
    assert newton_check(m + 2, m)


def test_newton_examples():
    assert newton_check(1, 3)
    assert newton_check(2, 2)
    assert newton_check(3, 4)


def test_divide_linear():
    T = PolyRing.t_ring(3)
    t1, t2, t3 = T.gens()
    q = (t1 + t3) ** 2 - t2
    assert divide_linear((t1 - t2) * q, "t1", "t2") == q
    with pytest.raises(NotDivisible):
        divide_linear(t1, "t1", "t2")


def test_is_symmetric_in():
    ys = Q3.gens()
    assert is_symmetric_in(elementary(2, ys), ["x1", "x2", "x3"])
    assert not is_symmetric_in(ys[0] - ys[1], ["x1", "x2"])
    assert is_symmetric_in(b(3, 2, 3), ["u1", "u2"])


def test_monomials_of_degree():
    mons = monomials_of_degree(3, 2)
    assert len(mons) == 6
    assert mons[0] == (2, 0, 0) and mons[-1] == (0, 0, 2)


def test_quotient_dims():
    assert quotient_graded_dim(Q3.gens(), 2) == 0
    assert quotient_graded_dim(Q3.gens(), 0) == 1
    assert quotient_graded_dim([Q3.one], 0) == 0
    assert quotient_graded_dim(ideal_Icheck(HessFn((2, 3, 3))), 2) == 2
    assert quotient_graded_dim(ideal_Icheck(HessFn((3, 3, 3))), 6) == 1


def test_quotient_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        quotient_graded_dim([Q3["x1"] + 1], 2)
    with pytest.raises(ValueError):
        quotient_graded_dim(Q3.gens(), 3)


def test_hilbert_series_examples():
    assert hilbert_series(ideal_Icheck(HessFn((2, 3, 3))), 8) == UniPoly([1, 0, 2, 0, 1])
    assert hilbert_series(ideal_J(HessFn((2, 3, 3))), 8) == UniPoly([1, 0, 2, 0, 1])
    # no generators: C(k + 2, 2) monomials in degree 2k
    assert hilbert_series([], 6, Q3) == UniPoly([1, 0, 3, 0, 6, 0, 10])


@pytest.mark.parametrize("d", [1, 2, 3])
def test_single_generator_series(d):
    g = Q3["x1"] ** d + Q3["x2"] * Q3["x3"] ** (d - 1)
    top = 12
    assert hilbert_series([g], top) == hilbert_product([2 * d], 3, top)


def test_regular_sequence_examples():
    assert is_regular_sequence(Q3.gens())
    R2 = PolyRing.x_only(2)
    y1, y2 = R2.gens()
    assert not is_regular_sequence([y1, y1 * y2])
    assert is_regular_sequence(ideal_Icheck(HessFn((2, 3, 3))))


def test_graded_piece_normal_forms():
    piece = GradedPiece(Q3.gens()[:2], 2, Q3)
    assert piece.dim == 1
    assert piece.is_zero(Q3["x1"] - Q3["x2"])
    assert piece.reduce(3 * Q3["x3"]) == [3]


def test_unipoly():
    a = UniPoly([1, 1])
    assert a * a == UniPoly([1, 2, 1])
    assert (a * a)(1) == 4
    assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert a.stretch(2) == UniPoly([1, 0, 1])
    assert a.to_str("s") == "1 + s"
    assert UniPoly.q_integer(3) == UniPoly([1, 1, 1])
