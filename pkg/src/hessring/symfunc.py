"""
Degree-``n`` symmetric functions in ``n`` variables with coefficients in
``Z[t]``, the Schur basis, and the chromatic quasisymmetric function of an
incomparability graph.

A degree-``n`` symmetric function is determined by its coefficients on the
monomial symmetric functions ``m_lambda`` with ``lambda |- n``; every such
``lambda`` has at most ``n`` parts, so ``n`` variables (and ``n`` colours)
lose nothing.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Literal

from .guards import check_guard
from .hessenberg import HessFn, IncGraph, incomparability_graph
from .polyring import UniPoly

__all__ = [
    "Partition", "SymFn", "partitions", "conjugate", "dominates", "kostka",
    "schur", "expand_in_schur", "omega", "hook_dim", "count_syt",
    "chromatic_qsym", "sw_trivial_coeff", "betti_from_xg", "NotSymmetric",
]

Partition = tuple[int, ...]

XG_GUARD = 7
BETTI_GUARD = 6


class NotSymmetric(ValueError):
    pass


def _validate(lam: Partition, n: int | None = None) -> Partition:
    lam = tuple(int(p) for p in lam)
    if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    if n is not None and sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    return lam


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return tuple(gen(n, n))


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > k) for k in range(lam[0])) if lam else ()


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Semistandard tableaux of shape ``lam`` and content ``mu``, by filling row strips."""
    if sum(lam) != sum(mu):
        return 0

    # place the entries 1, 2, ... in turn; each letter adds a horizontal strip
    def place(shape: tuple[int, ...], letter: int) -> int:
        if letter == len(mu):
            return 1 if shape == tuple(lam) else 0
        total = 0
        for new in _horizontal_strips(shape, mu[letter], lam):
            total += place(new, letter + 1)
        return total

    return place((0,) * len(lam), 0)


def _horizontal_strips(shape: tuple[int, ...], size: int, bound: Partition):
    """Shapes inside ``bound`` obtained from ``shape`` by adding a horizontal strip of ``size``."""
    rows = len(shape)

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                yield tuple(acc)
            return
        # row r may grow up to the old length of row r-1 and the bound
        cap = bound[r] if r == 0 else min(bound[r], shape[r - 1])
        for add in range(min(left, cap - shape[r]), -1, -1):
            acc.append(shape[r] + add)
            yield from rec(r + 1, left - add, acc)
            acc.pop()

    yield from rec(0, size, [])


@dataclass(frozen=True)
class SymFn:
    """
    ``coords`` maps partitions of ``n`` to polynomials in ``t``; the
    ``basis`` tag says whether they are ``m_lambda`` or ``s_lambda``
    coordinates.  Zero coordinates are omitted.
    """
    n: int
    coords: dict[Partition, UniPoly]
    basis: Literal["monomial", "schur"]

    def __post_init__(self):
        if self.basis not in ("monomial", "schur"):
            raise ValueError(f"unknown basis {self.basis!r}")
        for lam in self.coords:
            _validate(lam, self.n)
        object.__setattr__(self, "coords", {lam: c for lam, c in self.coords.items() if c})

    def coeff(self, lam: Partition) -> UniPoly:
        return self.coords.get(tuple(lam), UniPoly())

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymFn) and self.n == other.n
                and self.basis == other.basis and self.coords == other.coords)

    def at_t(self, value) -> dict[Partition, object]:
        return {lam: c(value) for lam, c in self.coords.items()}


def schur(lam: Partition, n: int | None = None) -> SymFn:
    """``s_lambda`` in monomial coordinates (Kostka numbers)."""
    lam = _validate(lam)
    n = sum(lam) if n is None else n
    _validate(lam, n)
    return SymFn(n, {mu: UniPoly([kostka(lam, mu)]) for mu in partitions(n)
                     if kostka(lam, mu)}, "monomial")


def expand_in_schur(fn: SymFn) -> SymFn:
    """
    Schur coordinates of ``fn`` by back-substitution against the Kostka
    matrix, which is unitriangular in dominance order.  Partitions are
    processed in decreasing lexicographic order, a linear extension of it.
    """
    if fn.basis == "schur":
        return fn
    remaining = {mu: fn.coeff(mu) for mu in partitions(fn.n)}
    out: dict[Partition, UniPoly] = {}
    for lam in partitions(fn.n):
        c = remaining[lam]
        if not c:
            continue
        out[lam] = c
        for mu in partitions(fn.n):
            k = kostka(lam, mu)
            if k:
                remaining[mu] = remaining[mu] - c * k
    if any(remaining.values()):
        raise ArithmeticError("Schur expansion left a residue")
    return SymFn(fn.n, out, "schur")


def to_monomial(fn: SymFn) -> SymFn:
    if fn.basis == "monomial":
        return fn
    acc = {mu: UniPoly() for mu in partitions(fn.n)}
    for lam, c in fn.coords.items():
        for mu in partitions(fn.n):
            k = kostka(lam, mu)
            if k:
                acc[mu] = acc[mu] + c * k
    return SymFn(fn.n, acc, "monomial")


def omega(fn: SymFn) -> SymFn:
    """``s_lambda -> s_{lambda*}``."""
    if fn.basis != "schur":
        raise ValueError("omega expects Schur coordinates")
    return SymFn(fn.n, {conjugate(lam): c for lam, c in fn.coords.items()}, "schur")


def hook_dim(lam: Partition) -> int:
    """``n! / prod(hooks)``: the dimension of the irreducible ``S_n``-module."""
    lam = _validate(lam)
    conj = conjugate(lam)
    hooks = prod(lam[r] - c + conj[c] - r - 1 for r in range(len(lam)) for c in range(lam[r]))
    return factorial(sum(lam)) // hooks


def count_syt(lam: Partition) -> int:
    """Standard Young tableaux of shape ``lam``, by removing corners."""
    lam = _validate(lam)

    @lru_cache(maxsize=None)
    def rec(shape: tuple[int, ...]) -> int:
        if sum(shape) == 0:
            return 1
        total = 0
        for r, length in enumerate(shape):
            below = shape[r + 1] if r + 1 < len(shape) else 0
            if length > below:
                total += rec(shape[:r] + (length - 1,) + shape[r + 1:])
        return total

    return rec(lam)


def _colorings(graph: IncGraph, ncolors: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Proper colourings ``kappa: [n] -> [ncolors]`` with their ascent counts."""
    n = graph.n
    earlier = [[j for j in range(1, v) if graph.adjacent(j, v)] for v in range(1, n + 1)]
    kappa = [0] * (n + 1)

    def rec(v: int, asc: int):
        if v > n:
            yield tuple(kappa[1:]), asc
            return
        for color in range(1, ncolors + 1):
            if any(kappa[j] == color for j in earlier[v - 1]):
                continue
            kappa[v] = color
            yield from rec(v + 1, asc + sum(1 for j in earlier[v - 1] if kappa[j] < color))
        kappa[v] = 0

    yield from rec(1, 0)


def chromatic_qsym(graph: IncGraph | HessFn, n: int | None = None) -> SymFn:
    """
    ``X_G(x, t) = sum_kappa t^{asc(kappa)} x_kappa`` over proper colourings
    with ``n`` colours, in monomial coordinates.  Every exponent vector is
    checked against its sorted partition, so a non-symmetric result raises
    :class:`NotSymmetric`.
    """
    if isinstance(graph, HessFn):
        graph = incomparability_graph(graph)
    n = graph.n if n is None else n
    check_guard("chromatic_qsym", n, 1, XG_GUARD)
    by_content: dict[tuple[int, ...], Counter] = {}
    for kappa, asc in _colorings(graph, n):
        content = [0] * n
        for color in kappa:
            content[color - 1] += 1
        by_content.setdefault(tuple(content), Counter())[asc] += 1
    coords: dict[Partition, UniPoly] = {}
    for content, counter in by_content.items():
        poly = UniPoly([counter.get(k, 0) for k in range(max(counter) + 1)])
        lam = tuple(sorted((c for c in content if c), reverse=True))
        if lam in coords:
            if coords[lam] != poly:
                raise NotSymmetric(f"coefficient of x^{content} differs from m_{lam}")
        else:
            coords[lam] = poly
    # a partition whose monomials are all missing must be missing for every arrangement
    for lam in coords:
        padded = lam + (0,) * (n - len(lam))
        for arrangement in set(itertools.permutations(padded)):
            if arrangement not in by_content:
                raise NotSymmetric(f"monomial x^{arrangement} missing from m_{lam}")
    return SymFn(graph.n, coords, "monomial")


def sw_trivial_coeff(h: HessFn) -> UniPoly:
    """``prod_j [h(j) - j + 1]_t``."""
    out = UniPoly([1])
    for j in range(1, h.n + 1):
        out = out * UniPoly.q_integer(h(j) - j + 1)
    return out


def betti_from_xg(h: HessFn) -> UniPoly:
    """
    ``sum_j dim H^{2j} q^j`` for ``Hess(S, h)`` from the Schur expansion of
    ``omega X_G``: each ``s_lambda`` contributes ``hook_dim(lambda)``.
    """
    check_guard("betti_from_xg", h.n, 1, BETTI_GUARD)
    expansion = omega(expand_in_schur(chromatic_qsym(h)))
    total = UniPoly()
    for lam, c in expansion.coords.items():
        if any(v < 0 or int(v) != v for v in c.coeffs):
            raise ArithmeticError(f"coefficient of s_{lam} in omega X_G is not in N[t]: {c}")
        total = total + c * hook_dim(lam)
    return total
