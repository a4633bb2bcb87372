"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation.

Positions and values are 1-based.  The virtual value ``w(0) = 0`` is honoured
by :meth:`Permutation.__call__` and :meth:`Permutation.position_of`, so that
``w.position_of(w(j) - 1)`` is ``0`` whenever ``w(j) == 1``.

>>> w = Permutation((2, 3, 1))
>>> w(1), w(0), w.position_of(0)
(2, 0, 0)
>>> sorted(n_inversions(w))
[(1, 3)]
>>> minimal_hess(w).values
(3, 3, 3)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

from .guards import check_guard

if TYPE_CHECKING:
    from .hessenberg import HessFn

__all__ = [
    "Permutation", "identity", "inverse", "n_inversions", "d_set",
    "minimal_hess", "minimal_hess_formula", "adjacent_swap", "transposition",
    "inv_h", "enumerate_sn",
]

SN_GUARD = 9


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``[n]``, stored as ``(w(1), ..., w(n))``."""
    one_line: tuple[int, ...]

    def __post_init__(self):
        one_line = tuple(int(v) for v in self.one_line)
        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ValueError(f"not a permutation of [n]: {self.one_line!r}")
        object.__setattr__(self, "one_line", one_line)
        object.__setattr__(
            self, "_pos", (0,) + tuple(p for _, p in sorted(
                (v, i) for i, v in enumerate(one_line, start=1))))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        return self.one_line[i - 1]

    def position_of(self, value: int) -> int:
        """Return ``w^{-1}(value)``, with ``w^{-1}(0) = 0``."""
        if not 0 <= value <= self.n:
            raise IndexError(f"value {value} outside [0, {self.n}]")
        return self._pos[value]

    def __mul__(self, other: Permutation) -> Permutation:
        # (u * v)(i) = u(v(i))
        if self.n != other.n:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def __iter__(self):
        return iter(self.one_line)

    def __len__(self):
        return self.n

    def word(self) -> str:
        """One-line word without separators, e.g. ``'231'`` (``n <= 9``)."""
        return "".join(str(v) for v in self.one_line)

    def __str__(self) -> str:
        return "(" + " ".join(str(v) for v in self.one_line) + ")"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def inverse(w: Permutation) -> Permutation:
    return Permutation(tuple(w.position_of(v) for v in range(1, w.n + 1)))


def transposition(n: int, a: int, b: int) -> Permutation:
    """The permutation of ``[n]`` exchanging ``a`` and ``b``."""
    word = list(range(1, n + 1))
    word[a - 1], word[b - 1] = word[b - 1], word[a - 1]
    return Permutation(tuple(word))


def n_inversions(w: Permutation) -> set[tuple[int, int]]:
    """
    Pairs ``(i, j)`` with ``i < j`` and ``w(i) = w(j) + 1``.

    The first entry is the left position ``LP`` and the second the right
    position ``RP`` of the pair.
    """
    return {(w.position_of(v + 1), w.position_of(v))
            for v in range(1, w.n)
            if w.position_of(v + 1) < w.position_of(v)}


def d_set(w: Permutation, j: int) -> set[tuple[int, int]]:
    """N-inversions straddling position ``j``: ``LP <= j < RP``."""
    if not 1 <= j <= w.n:
        raise IndexError(f"position {j} outside [1, {w.n}]")
    return {(lp, rp) for lp, rp in n_inversions(w) if lp <= j < rp}


def minimal_hess(w: Permutation) -> HessFn:
    """
    The smallest Hessenberg function ``h_w`` for which ``w`` is a fixed point.

    ``h_w(j)`` is the largest right position in ``D_w(j)``, or ``j`` when that
    set is empty.
    """
    from .hessenberg import HessFn

    values = []
    for j in range(1, w.n + 1):
        straddling = d_set(w, j)
        values.append(max(rp for _, rp in straddling) if straddling else j)
    return HessFn(tuple(values))


def minimal_hess_formula(w: Permutation, j: int) -> int:
    """``max{w^{-1}(w(p) - 1) : p <= j}``; agrees with ``h_w(j)`` when ``D_w(j)`` is nonempty."""
    return max(w.position_of(w(p) - 1) for p in range(1, j + 1))


def adjacent_swap(w: Permutation, m: int) -> Permutation:
    """Exchange the entries in positions ``m`` and ``m + 1``."""
    if not 1 <= m <= w.n - 1:
        raise IndexError(f"swap position {m} outside [1, {w.n - 1}]")
    word = list(w.one_line)
    word[m - 1], word[m] = word[m], word[m - 1]
    return Permutation(tuple(word))


def inv_h(w: Permutation, h: HessFn) -> int:
    """Number of pairs ``j < i <= h(j)`` with ``w(j) > w(i)``."""
    if w.n != h.n:
        raise ValueError("size mismatch between permutation and Hessenberg function")
    return sum(1 for j in range(1, w.n + 1)
               for i in range(j + 1, h(j) + 1)
               if w(j) > w(i))


def enumerate_sn(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic order of one-line words."""
    check_guard("enumerate_sn", n, 1, SN_GUARD)
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)
