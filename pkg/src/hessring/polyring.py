"""
Exact sparse multivariate polynomials over the rationals.

Every variable has cohomological degree 2, so a monomial of total degree
``k`` sits in degree ``2k``.  Polynomials live in a :class:`PolyRing`, which
is nothing more than an ordered tuple of variable names; the monomial order
is graded lexicographic with the first name largest.

Graded pieces of quotient rings are handled by exact linear algebra on the
monomial basis of a single degree (no Groebner bases).

>>> R = PolyRing.x_ring(2)
>>> x1, x2, t = R.gens()
>>> str((x1 - x2 - t) * (x1 - t))
'x1^2 - x1*x2 - 2*x1*t + x2*t + t^2'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

import flint

__all__ = [
    "PolyRing", "MPoly", "UniPoly", "AmbientMismatch", "NotDivisible",
    "elementary", "power_sum", "complete_h", "newton_check",
    "divide_linear", "is_symmetric_in", "monomials_of_degree",
    "GradedPiece", "quotient_graded_dim", "hilbert_series",
    "hilbert_product", "is_regular_sequence",
]

Scalar = Union[int, Fraction]
Exps = tuple[int, ...]

MONOMIAL_GUARD = 10**6


class AmbientMismatch(ValueError):
    """Operands live in different polynomial rings."""


class NotDivisible(ArithmeticError):
    """An exact division left a nonzero remainder."""


def _norm(c) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, (int, Fraction)):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficient {c!r} is not an exact rational")


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring over Q in the named variables (first name is largest)."""
    names: tuple[str, ...]

    @staticmethod
    @lru_cache(maxsize=None)
    def x_ring(n: int) -> PolyRing:
        """``Q[x1, ..., xn, t]``."""
        return PolyRing(tuple(f"x{i}" for i in range(1, n + 1)) + ("t",))

    @staticmethod
    @lru_cache(maxsize=None)
    def x_only(n: int) -> PolyRing:
        """``Q[x1, ..., xn]``."""
        return PolyRing(tuple(f"x{i}" for i in range(1, n + 1)))

    @staticmethod
    @lru_cache(maxsize=None)
    def t_ring(n: int) -> PolyRing:
        """``Q[t1, ..., tn]``, the equivariant cohomology of a point."""
        return PolyRing(tuple(f"t{i}" for i in range(1, n + 1)))

    @staticmethod
    @lru_cache(maxsize=None)
    def u_ring(n: int) -> PolyRing:
        """``Q[u1, ..., un, t]``."""
        return PolyRing(tuple(f"u{i}" for i in range(1, n + 1)) + ("t",))

    @staticmethod
    @lru_cache(maxsize=None)
    def univariate(name: str = "t") -> PolyRing:
        return PolyRing((name,))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in {self.names}") from None

    def gen(self, name_or_index: Union[str, int]) -> MPoly:
        k = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        exps = tuple(1 if i == k else 0 for i in range(self.nvars))
        return MPoly(self, {exps: 1})

    def __getitem__(self, name: str) -> MPoly:
        return self.gen(name)

    def gens(self) -> list[MPoly]:
        return [self.gen(k) for k in range(self.nvars)]

    def const(self, c: Scalar) -> MPoly:
        return MPoly(self, {(0,) * self.nvars: c})

    @property
    def zero(self) -> MPoly:
        return MPoly(self, {})

    @property
    def one(self) -> MPoly:
        return self.const(1)


class MPoly:
    """
    An immutable polynomial: a map from exponent tuples to nonzero rationals.

    Integer scalars mix freely with polynomials in arithmetic.
    """
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exps, Scalar] = ()):
        self.ring = ring
        clean = {}
        for exps, c in dict(terms).items():
            c = _norm(c)
            if c != 0:
                if len(exps) != ring.nvars:
                    raise ValueError(f"exponent {exps} does not fit ring {ring.names}")
                clean[tuple(exps)] = c
        self.terms: dict[Exps, Scalar] = clean
        self._hash = None

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise AmbientMismatch(f"{self.ring.names} vs {other.ring.names}")
            return other
        return self.ring.const(_norm(other))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> MPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> MPoly:
        return (-self) + other

    def __mul__(self, other) -> MPoly:
        if not isinstance(other, MPoly):
            try:
                c = _norm(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        other = self._coerce(other)
        out: dict[Exps, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> MPoly:
        c = _norm(c)
        if c == 0:
            return self.ring.zero
        return MPoly(self.ring, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k: int) -> MPoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.const(_norm(other)).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure --------------------------------------------------------

    def total_degree(self) -> int:
        """Polynomial degree (each variable counts 1); ``-1`` for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self) -> int:
        """Cohomological degree: twice the polynomial degree."""
        d = self.total_degree()
        return -1 if d < 0 else 2 * d

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def variables(self) -> set[str]:
        return {self.ring.names[k] for e in self.terms for k, a in enumerate(e) if a}

    def coefficient(self, exps: Exps) -> Scalar:
        return self.terms.get(tuple(exps), 0)

    def constant_value(self) -> Scalar:
        """The scalar value of a constant polynomial."""
        if any(any(e) for e in self.terms):
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * self.ring.nvars, 0)

    def sorted_terms(self) -> list[tuple[Exps, Scalar]]:
        """Terms in decreasing graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def substitute(self, assignment: Mapping[str, object],
                   target: PolyRing | None = None) -> MPoly:
        """
        Ring-homomorphic image under ``name -> value``.

        Values may be polynomials in ``target`` or scalars.  A variable that
        is not assigned passes through to the same-named variable of
        ``target``; if ``target`` has no such variable, :class:`KeyError`.
        """
        target = target or self.ring
        images: list[MPoly] = []
        used = [any(e[k] for e in self.terms) for k in range(self.ring.nvars)]
        for k, name in enumerate(self.ring.names):
            if name in assignment:
                v = assignment[name]
                if isinstance(v, MPoly):
                    if v.ring != target:
                        raise AmbientMismatch(f"image of {name} is not in {target.names}")
                    images.append(v)
                else:
                    images.append(target.const(_norm(v)))
            elif name in target.names:
                images.append(target.gen(name))
            elif used[k]:
                raise KeyError(f"no assignment for variable {name!r}")
            else:
                images.append(target.zero)
        powers: dict[tuple[int, int], MPoly] = {}

        def power(k: int, a: int) -> MPoly:
            key = (k, a)
            if key not in powers:
                powers[key] = images[k] ** a
            return powers[key]

        out = target.zero
        for e, c in self.terms.items():
            term = target.const(c)
            for k, a in enumerate(e):
                if a:
                    term = term * power(k, a)
            out = out + term
        return out

    def permute_vars(self, mapping: Mapping[int, int]) -> MPoly:
        """Rename variable index ``k`` to ``mapping[k]`` (0-based, a bijection)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.ring.nvars
            for k, a in enumerate(e):
                new[mapping.get(k, k)] += a
            out[tuple(new)] = c
        return MPoly(self.ring, out)

    def to_unipoly(self) -> UniPoly:
        """Convert a polynomial of a one-variable ring."""
        if self.ring.nvars != 1:
            raise ValueError(f"{self.ring.names} is not univariate")
        top = max((e[0] for e in self.terms), default=-1)
        coeffs = [0] * (top + 1)
        for (a,), c in self.terms.items():
            coeffs[a] = c
        return UniPoly(coeffs)

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                name if a == 1 else f"{name}^{a}"
                for name, a in zip(self.ring.names, e) if a)
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"


class UniPoly:
    """
    A univariate polynomial with exact coefficients; ``coeffs[k]`` is the
    coefficient of ``var^k``.  Trailing zeros are trimmed.
    """
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def q_integer(cls, i: int) -> UniPoly:
        """``[i]_t = 1 + t + ... + t^{i-1}``."""
        return cls([1] * i)

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other) -> UniPoly:
        other = self._coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> UniPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> UniPoly:
        return (-self) + other

    def __mul__(self, other) -> UniPoly:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def stretch(self, k: int) -> UniPoly:
        """Substitute ``var -> var^k``."""
        out = [0] * (k * max(len(self.coeffs) - 1, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return UniPoly(out)

    def truncate(self, top: int) -> UniPoly:
        return UniPoly(self.coeffs[:top + 1])

    def as_list(self) -> list:
        return [c if isinstance(c, int) else str(c) for c in self.coeffs]

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(c)
            body = (str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}"))
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"


# -- symmetric polynomials --------------------------------------------------

def elementary(k: int, items: Sequence):
    """``e_k`` of the given ring elements or numbers; ``e_0 = 1``, ``e_k = 0`` past ``len``."""
    if k < 0 or k > len(items):
        return 0 if not items or not isinstance(items[0], MPoly) else items[0].ring.zero
    es: list = [1] + [0] * k
    for y in items:
        for r in range(k, 0, -1):
            es[r] = es[r] + es[r - 1] * y
    return es[k]


def power_sum(k: int, items: Sequence):
    if k == 0:
        return len(items)
    acc = 0
    for y in items:
        acc = acc + y ** k
    return acc


def complete_h(k: int, items: Sequence):
    """Complete homogeneous ``h_k``; ``h_0 = 1``."""
    if k < 0:
        return 0
    hs: list = [1] + [0] * k
    for y in items:
        for r in range(1, k + 1):
            hs[r] = hs[r] + hs[r - 1] * y
    return hs[k]


def newton_check(q: int, m: int) -> bool:
    """
    Check ``-sum_{r=1}^{q-1} (-1)^r e_r p_{q-r} == (-1)^q q e_q + p_q`` in
    ``m`` variables.
    """
    if q < 1 or m < 1:
        raise ValueError("need q >= 1 and m >= 1")
    ring = PolyRing(tuple(f"y{i}" for i in range(1, m + 1)))
    ys = ring.gens()
    lhs = ring.zero
    for r in range(1, q):
        lhs = lhs - (-1) ** r * elementary(r, ys) * power_sum(q - r, ys)
    rhs = (-1) ** q * q * elementary(q, ys) + power_sum(q, ys)
    return (lhs - rhs).is_zero()


def divide_linear(p: MPoly, a: str, b: str) -> MPoly:
    """Exact quotient of ``p`` by ``a - b``; raises :class:`NotDivisible`."""
    ka, kb = p.ring.index(a), p.ring.index(b)
    if ka == kb:
        raise ValueError("cannot divide by zero linear form")
    rem = dict(p.terms)
    quot: dict[Exps, Scalar] = {}
    while rem:
        # peel off the terms of highest degree in variable a
        top = max(e[ka] for e in rem)
        if top == 0:
            raise NotDivisible(f"{MPoly(p.ring, rem)} remains after dividing by {a} - {b}")
        for e, c in [(e, c) for e, c in rem.items() if e[ka] == top]:
            q = list(e)
            q[ka] -= 1
            q = tuple(q)
            quot[q] = quot.get(q, 0) + c
            del rem[e]
            # subtract c * q * (a - b): the "a" part is e itself; add back c * q * b
            qb = list(q)
            qb[kb] += 1
            qb = tuple(qb)
            v = rem.get(qb, 0) + c
            if v == 0:
                rem.pop(qb, None)
            else:
                rem[qb] = v
    return MPoly(p.ring, quot)


def is_symmetric_in(p: MPoly, names: Sequence[str]) -> bool:
    """Invariance of ``p`` under every adjacent transposition of ``names``."""
    idx = [p.ring.index(name) for name in names]
    for a, b in zip(idx, idx[1:]):
        if p.permute_vars({a: b, b: a}) != p:
            return False
    return True


# -- graded pieces of quotient rings ------------------------------------------

@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, d: int) -> tuple[Exps, ...]:
    """Exponent tuples of total degree ``d``, in decreasing grlex order."""
    if d < 0:
        return ()
    count = comb(d + nvars - 1, nvars - 1) if nvars else (1 if d == 0 else 0)
    if count > MONOMIAL_GUARD:
        raise MemoryError(f"{count} monomials of degree {d} in {nvars} variables exceeds the guard")
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


def _check_gens(gens: Sequence[MPoly]) -> None:
    for g in gens:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError(f"generator is not homogeneous: {g}")


def _span_rows(gens: Sequence[MPoly], d: int, nvars: int):
    """Coefficient rows of ``m * g`` with ``deg(m * g) = d``, and the column index."""
    cols = monomials_of_degree(nvars, d)
    col = {e: k for k, e in enumerate(cols)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        dg = g.total_degree()
        for m in monomials_of_degree(nvars, d - dg):
            row = {}
            for e, c in g.terms.items():
                row[col[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return rows, cols


def _to_flint(rows, ncols: int):
    dense = [0] * (len(rows) * ncols)
    rational = False
    for r, row in enumerate(rows):
        base = r * ncols
        for k, c in row.items():
            dense[base + k] = c
            rational = rational or isinstance(c, Fraction)
    if rational:
        return flint.fmpq_mat(len(rows), ncols,
                              [flint.fmpq(c.numerator, c.denominator) if isinstance(c, Fraction)
                               else c for c in dense])
    return flint.fmpz_mat(len(rows), ncols, dense)


def _degree_arg(degree: int) -> int:
    if degree < 0 or degree % 2:
        raise ValueError(f"cohomological degree must be a nonnegative even integer, got {degree}")
    return degree // 2


def quotient_graded_dim(gens: Sequence[MPoly], degree: int,
                        ring: PolyRing | None = None) -> int:
    """
    ``dim_Q`` of ``(ring / (gens))`` in cohomological ``degree``, by exact
    row reduction of the monomial multiples of the generators.
    """
    d = _degree_arg(degree)
    ring = ring or (gens[0].ring if gens else None)
    if ring is None:
        raise ValueError("ring is required when there are no generators")
    if any(g.ring != ring for g in gens):
        raise AmbientMismatch("generators live in different rings")
    _check_gens(gens)
    rows, cols = _span_rows(gens, d, ring.nvars)
    if not rows:
        return len(cols)
    return len(cols) - _to_flint(rows, len(cols)).rank()


def hilbert_series(gens: Sequence[MPoly], top_degree: int,
                   ring: PolyRing | None = None) -> UniPoly:
    """Hilbert series of ``ring / (gens)`` in ``s``, truncated at ``top_degree``."""
    top = _degree_arg(top_degree)
    coeffs = [0] * (2 * top + 1)
    for d in range(top + 1):
        coeffs[2 * d] = quotient_graded_dim(gens, 2 * d, ring)
    return UniPoly(coeffs)


def hilbert_product(degrees: Sequence[int], nvars: int, top_degree: int) -> UniPoly:
    """
    Power series of ``prod (1 - s^{deg}) / (1 - s^2)^nvars`` through ``top_degree``.

    ``degrees`` are cohomological (even) degrees.
    """
    top = _degree_arg(top_degree)
    num = UniPoly([1])
    for deg in degrees:
        num = num * (UniPoly([1]) - UniPoly.monomial(deg))
    # 1 / (1 - s^2)^nvars = sum_k C(nvars - 1 + k, k) s^{2k}
    den_inv = UniPoly([comb(nvars - 1 + k, k) for k in range(top + 1)]).stretch(2)
    return (num * den_inv).truncate(2 * top)


def is_regular_sequence(gens: Sequence[MPoly], ring: PolyRing | None = None) -> bool:
    """
    Hilbert-series criterion: the quotient series must equal the
    complete-intersection product through the product's degree (and, for
    ``len(gens) == nvars``, vanish two degrees past it).
    """
    ring = ring or gens[0].ring
    _check_gens(gens)
    if any(g.total_degree() <= 0 for g in gens):
        return False
    degrees = [g.degree() for g in gens]
    top = sum(degrees)
    if len(gens) == ring.nvars:
        top += 2
    actual = hilbert_series(gens, top, ring)
    expected = hilbert_product(degrees, ring.nvars, top)
    return actual == expected


class GradedPiece:
    """
    One graded piece of ``ring / (gens)`` with explicit normal forms.

    The ideal's piece is put in reduced row-echelon form over the monomial
    basis (grlex, largest first); the non-pivot monomials form a basis of
    the quotient piece, and :meth:`reduce` writes any homogeneous polynomial
    of this degree in that basis.
    """

    def __init__(self, gens: Sequence[MPoly], degree: int, ring: PolyRing | None = None):
        self.degree = degree
        d = _degree_arg(degree)
        self.ring = ring or gens[0].ring
        _check_gens(gens)
        rows, cols = _span_rows(gens, d, self.ring.nvars)
        self.columns = cols
        self._col = {e: k for k, e in enumerate(cols)}
        self.echelon: list[dict[int, Fraction]] = []
        self.pivots: list[int] = []
        if rows:
            mat = _to_flint(rows, len(cols))
            if isinstance(mat, flint.fmpz_mat):
                mat = flint.fmpq_mat(mat)
            rref, rank = mat.rref()
            for r in range(rank):
                row = {}
                for k in range(len(cols)):
                    v = rref[r, k]
                    if v != 0:
                        row[k] = Fraction(int(v.p), int(v.q))
                self.pivots.append(min(row))
                self.echelon.append(row)
        pivot_set = set(self.pivots)
        self.basis = [e for k, e in enumerate(cols) if k not in pivot_set]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, p: MPoly) -> list[Fraction]:
        """Coordinates of ``p`` modulo the ideal in :attr:`basis`."""
        if p.ring != self.ring:
            raise AmbientMismatch("polynomial is not in this ring")
        vec: dict[int, Fraction] = {}
        for e, c in p.terms.items():
            if 2 * sum(e) != self.degree:
                raise ValueError(f"{p} is not homogeneous of degree {self.degree}")
            vec[self._col[e]] = Fraction(c)
        for piv, row in zip(self.pivots, self.echelon):
            c = vec.get(piv, 0)
            if c:
                for k, v in row.items():
                    vec[k] = vec.get(k, 0) - c * v
        return [vec.get(self._col[e], Fraction(0)) for e in self.basis]

    def is_zero(self, p: MPoly) -> bool:
        return not any(self.reduce(p))
