"""
Hessenberg functions, their orders, negative roots, fixed points of the
regular nilpotent Hessenberg variety, splitting, and incomparability graphs.

The wire format of a Hessenberg function is a comma-joined list of its
values with no spaces, e.g. ``"3,3,4,5,6,6"``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

from .guards import check_guard
from .perm import Permutation, enumerate_sn, minimal_hess

__all__ = [
    "HessFn", "IncGraph", "ConsistencyError", "enumerate_hn", "catalan",
    "subset_order", "prec_order", "complex_dim", "negative_roots",
    "fixed_points", "split_at", "join_perms", "incomparability_graph",
]

HN_GUARD = 8
FIXED_POINT_GUARD = 8

_WIRE = re.compile(r"^[0-9]+(,[0-9]+)*$")


class ConsistencyError(AssertionError):
    """Two routes that must agree on a computed value did not."""


@dataclass(frozen=True, order=True)
class HessFn:
    """A nondecreasing ``h: [n] -> [n]`` with ``h(i) >= i``."""
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        n = len(values)
        if n == 0:
            raise ValueError("Hessenberg function on the empty set")
        for i, v in enumerate(values, start=1):
            if not i <= v <= n:
                raise ValueError(f"h({i}) = {v} violates {i} <= h({i}) <= {n}")
            if i > 1 and v < values[i - 2]:
                raise ValueError(f"h is not nondecreasing at {i}: {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> HessFn:
        """Parse the wire format ``"h1,h2,...,hn"``."""
        text = text.strip()
        if not _WIRE.match(text):
            raise ValueError(f"malformed Hessenberg function string: {text!r}")
        return cls(tuple(int(part) for part in text.split(",")))

    @classmethod
    def identity(cls, n: int) -> HessFn:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def full(cls, n: int) -> HessFn:
        return cls((n,) * n)

    @classmethod
    def peterson(cls, n: int) -> HessFn:
        return cls(tuple(min(j + 1, n) for j in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, j: int) -> int:
        # h(0) = 0 keeps "h(j - 1) < h(j)" meaningful at j = 1
        if j == 0:
            return 0
        return self.values[j - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class IncGraph:
    n: int
    edges: frozenset[tuple[int, int]]  # stored as (j, i) with j < i

    def adjacent(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges


def catalan(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)


def enumerate_hn(n: int) -> Iterator[HessFn]:
    """All Hessenberg functions on ``[n]``, in lexicographic order."""
    check_guard("enumerate_hn", n, 1, HN_GUARD)

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from extend(prefix)
            prefix.pop()

    for values in extend([]):
        yield HessFn(values)


def _same_size(h1: HessFn, h2: HessFn) -> None:
    if h1.n != h2.n:
        raise ValueError(f"size mismatch: {h1} vs {h2}")


def subset_order(h1: HessFn, h2: HessFn) -> bool:
    """``h1 ⊂ h2``: pointwise ``h1(j) <= h2(j)``."""
    _same_size(h1, h2)
    return all(a <= b for a, b in zip(h1.values, h2.values))


def prec_order(h1: HessFn, h2: HessFn) -> bool:
    """Strict reverse-lexicographic order: compare from the last entry down."""
    _same_size(h1, h2)
    for a, b in zip(reversed(h1.values), reversed(h2.values)):
        if a != b:
            return a < b
    return False


def complex_dim(h: HessFn) -> int:
    return sum(v - j for j, v in enumerate(h.values, start=1))


def negative_roots(h: HessFn) -> set[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``j < i <= h(j)``."""
    return {(i, j) for j in range(1, h.n + 1) for i in range(j + 1, h(j) + 1)}


def _fixed_by_inequality(w: Permutation, h: HessFn) -> bool:
    return all(w.position_of(w(j) - 1) <= h(j) for j in range(1, h.n + 1))


def fixed_points(h: HessFn) -> list[Permutation]:
    """
    The fixed points of ``Hess(N, h)`` as permutations, in lexicographic order.

    Membership is decided twice, by the inequality ``w^{-1}(w(j) - 1) <= h(j)``
    and by ``h_w ⊂ h``; a disagreement raises :class:`ConsistencyError`.
    """
    check_guard("fixed_points", h.n, 1, FIXED_POINT_GUARD)
    points = []
    for w in enumerate_sn(h.n):
        direct = _fixed_by_inequality(w, h)
        via_minimal = subset_order(minimal_hess(w), h)
        if direct != via_minimal:
            raise ConsistencyError(
                f"fixed-point criteria disagree for h={h}, w={w}: "
                f"inequality={direct}, minimal={via_minimal}")
        if direct:
            points.append(w)
    return points


def split_at(h: HessFn, r: int) -> tuple[HessFn, HessFn]:
    """Split ``h`` at a position with ``h(r) = r`` into ``H_r x H_{n-r}``."""
    if not 1 <= r < h.n:
        raise ValueError(f"split position {r} must lie in [1, {h.n - 1}]")
    if h(r) != r:
        raise ValueError(f"cannot split {h} at {r}: h({r}) = {h(r)} != {r}")
    return (HessFn(h.values[:r]),
            HessFn(tuple(v - r for v in h.values[r:])))


def join_perms(w1: Permutation, w2: Permutation) -> Permutation:
    """Concatenate ``w1`` with ``w2`` shifted up by ``w1.n``."""
    return Permutation(w1.one_line + tuple(v + w1.n for v in w2.one_line))


def split_fixed_points(h: HessFn, r: int) -> list[Permutation]:
    """Fixed points of ``h`` assembled from those of its two halves."""
    h1, h2 = split_at(h, r)
    return sorted(join_perms(a, b)
                  for a, b in itertools.product(fixed_points(h1), fixed_points(h2)))


def incomparability_graph(h: HessFn) -> IncGraph:
    """Graph on ``[n]`` joining ``j < i`` whenever ``i <= h(j)``."""
    return IncGraph(h.n, frozenset((j, i) for i, j in negative_roots(h)))
