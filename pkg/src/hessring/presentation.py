"""
The polynomial families behind the presentation of ``H^*(Hess(N, h))``.

* ``p_i = sum_{k<=i} (x_k - k t)``
* ``f_{j,j} = p_j``, ``f_{i,j} = f_{i-1,j-1} + (x_j - x_i - t) f_{i-1,j}``
* ``fcheck_{i,j} = sum_{k<=j} x_k prod_{l=j+1}^{i} (x_k - x_l)``, the ``t = 0`` shadow of ``f_{i,j}``
* ``b_{k,j}`` in ``u_1, ..., u_j, t``, used to expand ``f_{i,j}(w)``

Fixed-point values ``f_{i,j}(w)`` are univariate polynomials in ``t``
(``x_k -> w(k) t``), computed both by their own recursion and by substituting
into the expanded polynomial.  Every ``*_check`` function returns a
:class:`CheckResult`; a failure carries the offending indices as its witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .guards import check_guard
from .hessenberg import ConsistencyError, HessFn, fixed_points
from .perm import Permutation, adjacent_swap, enumerate_sn
from .polyring import (MPoly, PolyRing, UniPoly, complete_h, elementary,
                       is_symmetric_in, power_sum)

__all__ = [
    "CheckResult", "p", "f", "fcheck", "b", "FTable", "BTable", "betas",
    "ideal_I", "ideal_Icheck", "ideal_J", "eval_f_at", "eval_f_by_substitution",
    "fixed_point_vanishing", "swap_stability_check", "appendix_identity_check",
    "b_symmetry_check", "hilbert_closed_form", "powersum_transition_check",
    "peterson_reduction_check", "t_zero_check",
]


@dataclass
class CheckResult:
    """Outcome of an exhaustive identity check."""
    name: str
    checked: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **witness) -> None:
        self.failures.append(witness)

    def __bool__(self) -> bool:
        return self.ok


def _index_check(i: int, j: int, n: int) -> None:
    if not n >= i >= j >= 1:
        raise IndexError(f"need n >= i >= j >= 1, got i={i}, j={j}, n={n}")


# -- polynomial families ------------------------------------------------------

@lru_cache(maxsize=None)
def p(i: int, n: int) -> MPoly:
    """``p_i`` in ``Q[x1..xn, t]``; ``p_0 = 0``."""
    if not 0 <= i <= n:
        raise IndexError(f"p_{i} undefined for n={n}")
    R = PolyRing.x_ring(n)
    t = R["t"]
    out = R.zero
    for k in range(1, i + 1):
        out = out + R[f"x{k}"] - k * t
    return out


class FTable:
    """Memoized ``f_{i,j}`` for one ``n``."""

    def __init__(self, n: int):
        self.n = n
        self.ring = PolyRing.x_ring(n)
        self._entries: dict[tuple[int, int], MPoly] = {}

    def __getitem__(self, ij: tuple[int, int]) -> MPoly:
        i, j = ij
        if j == 0:
            return self.ring.zero
        _index_check(i, j, self.n)
        if ij not in self._entries:
            if i == j:
                value = p(j, self.n)
            else:
                R = self.ring
                value = self[i - 1, j - 1] + (R[f"x{j}"] - R[f"x{i}"] - R["t"]) * self[i - 1, j]
            self._entries[ij] = value
        return self._entries[ij]


@lru_cache(maxsize=None)
def _ftable(n: int) -> FTable:
    return FTable(n)


def f(i: int, j: int, n: int) -> MPoly:
    return _ftable(n)[i, j]


@lru_cache(maxsize=None)
def fcheck(i: int, j: int, n: int) -> MPoly:
    """The closed form for ``f_{i,j}`` at ``t = 0``, in ``Q[x1..xn]``."""
    _index_check(i, j, n)
    R = PolyRing.x_only(n)
    xs = R.gens()
    out = R.zero
    for k in range(j):
        term = xs[k]
        for l in range(j, i):
            term = term * (xs[k] - xs[l])
        out = out + term
    return out


def at_t_zero(poly: MPoly, n: int) -> MPoly:
    """Specialize ``t = 0`` from ``Q[x, t]`` into ``Q[x]``."""
    return poly.substitute({"t": 0}, PolyRing.x_only(n))


class BTable:
    """Memoized ``b_{k,j}`` in ``Q[u1..un, t]``; ``b_{*,0} = 0``."""

    def __init__(self, n: int):
        self.n = n
        self.ring = PolyRing.u_ring(n)
        self._entries: dict[tuple[int, int], MPoly] = {}

    def __getitem__(self, kj: tuple[int, int]) -> MPoly:
        k, j = kj
        if j == 0:
            return self.ring.zero
        if not self.n >= k >= j >= 1:
            raise IndexError(f"b_{{{k},{j}}} undefined for n={self.n}")
        if kj not in self._entries:
            R = self.ring
            t = R["t"]
            if k == j:
                value = R.zero
                for r in range(1, j + 1):
                    value = value + R[f"u{r}"] - (r - 1) * t
            else:
                # b_{k,j} = b_{k-1,j-1} + u_j b_{k-1,j} - (u_j + t) b_{k-2,j-1}
                u = R[f"u{j}"]
                value = (self[k - 1, j - 1] + u * self[k - 1, j]
                         - (u + t) * self[k - 2, j - 1])
            self._entries[kj] = value
        return self._entries[kj]


@lru_cache(maxsize=None)
def _btable(n: int) -> BTable:
    return BTable(n)


def b(k: int, j: int, n: int | None = None) -> MPoly:
    """``b_{k,j}``; the ambient ``n`` defaults to ``k``."""
    return _btable(n or max(k, 1))[k, j]


# -- ideals ---------------------------------------------------------------------

def betas(h: HessFn) -> tuple[int, ...]:
    """``beta_i = i - #{k : h(k) < i}``."""
    return tuple(i - sum(1 for v in h.values if v < i) for i in range(1, h.n + 1))


def ideal_I(h: HessFn) -> list[MPoly]:
    """Generators ``f_{h(j),j}`` of ``I_h``, in ``j`` order."""
    return [f(h(j), j, h.n) for j in range(1, h.n + 1)]


def ideal_I_labels(h: HessFn) -> list[str]:
    return [f"f_{{{h(j)},{j}}}" for j in range(1, h.n + 1)]


def ideal_Icheck(h: HessFn) -> list[MPoly]:
    """Generators ``fcheck_{h(j),j}``, in ``j`` order."""
    return [fcheck(h(j), j, h.n) for j in range(1, h.n + 1)]


def ideal_J(h: HessFn) -> list[MPoly]:
    """Generators ``h_{beta_i}(x_i, ..., x_n)`` for ``i = n, ..., 1``."""
    xs = PolyRing.x_only(h.n).gens()
    bs = betas(h)
    return [complete_h(bs[i - 1], xs[i - 1:]) for i in range(h.n, 0, -1)]


# -- values at fixed points ---------------------------------------------------

def eval_f_at(w: Permutation, i: int, j: int) -> UniPoly:
    """``f_{i,j}(w)`` in ``Q[t]`` via the fixed-point recursion."""
    _index_check(i, j, w.n)
    return _eval_table(w)[i, j]


@lru_cache(maxsize=4096)
def _eval_table(w: Permutation) -> dict[tuple[int, int], UniPoly]:
    n = w.n
    table: dict[tuple[int, int], UniPoly] = {}
    for j in range(1, n + 1):
        table[j, j] = UniPoly([0, sum(w(k) - k for k in range(1, j + 1))])
    for d in range(1, n):
        for j in range(1, n - d + 1):
            i = j + d
            left = table[i - 1, j - 1] if j > 1 else UniPoly()
            table[i, j] = left + UniPoly([0, w(j) - w(i) - 1]) * table[i - 1, j]
    return table


def eval_f_by_substitution(w: Permutation, i: int, j: int) -> UniPoly:
    """``f_{i,j}(w)`` by substituting ``x_k -> w(k) t`` into the expanded polynomial."""
    T = PolyRing.univariate("t")
    t = T["t"]
    assignment = {f"x{k}": w(k) * t for k in range(1, w.n + 1)}
    return f(i, j, w.n).substitute(assignment, T).to_unipoly()


def fixed_point_vanishing(h: HessFn, strict: bool = False) -> CheckResult:
    """
    ``f_{i,j}(w) = 0`` for every fixed point ``w`` of ``h``, every ``j`` and
    every ``i >= h(j)``.  Both evaluation routes are compared at ``i = h(j)``.
    """
    check_guard("fixed_point_vanishing", h.n, 1, 6)
    res = CheckResult(f"fixed-point-vanishing[{h}]")
    for w in fixed_points(h):
        for j in range(1, h.n + 1):
            via_sub = eval_f_by_substitution(w, h(j), j)
            if via_sub != eval_f_at(w, h(j), j):
                raise ConsistencyError(f"f_{{{h(j)},{j}}}({w}) differs between routes")
            for i in range(h(j), h.n + 1):
                res.checked += 1
                value = eval_f_at(w, i, j)
                if value:
                    res.fail(h=str(h), w=w.word(), i=i, j=j, value=str(value))
                    if strict:
                        raise AssertionError(res.failures[-1])
    return res


def swap_stability_check(n: int) -> CheckResult:
    """``f_{i,j}(w') = f_{i,j}(w)`` when ``w'`` swaps positions ``m, m+1`` and ``i, j != m``."""
    check_guard("swap_stability_check", n, 1, 5)
    res = CheckResult(f"swap-stability[n={n}]")
    for w in enumerate_sn(n):
        for m in range(1, n):
            w2 = adjacent_swap(w, m)
            for j in range(1, n + 1):
                for i in range(j, n + 1):
                    if i == m or j == m:
                        continue
                    res.checked += 1
                    if eval_f_at(w, i, j) != eval_f_at(w2, i, j):
                        res.fail(w=w.word(), m=m, i=i, j=j)
    return res


def _b_at(w: Permutation, k: int, j: int) -> UniPoly:
    """``b_{k,j}`` at ``u_r = (w(r) - 1) t``."""
    T = PolyRing.univariate("t")
    t = T["t"]
    assignment: dict[str, object] = {f"u{r}": (w(r) - 1) * t for r in range(1, w.n + 1)}
    return b(k, j, w.n).substitute(assignment, T).to_unipoly()


def appendix_identity_check(n: int) -> CheckResult:
    """
    ``f_{i,j}(w) = sum_{k=j}^{i} (-1)^{i-k} e_{i-k}(w(j+1..i)) t^{i-k} b_{k,j}(u, t)``
    with ``u_r = (w(r) - 1) t``, for all ``w`` and ``i >= j``.
    """
    check_guard("appendix_identity_check", n, 1, 5)
    res = CheckResult(f"appendix-identity[n={n}]")
    for w in enumerate_sn(n):
        for j in range(1, n + 1):
            for i in range(j, n + 1):
                res.checked += 1
                tail = [w(r) for r in range(j + 1, i + 1)]
                rhs = UniPoly()
                for k in range(j, i + 1):
                    coeff = (-1) ** (i - k) * elementary(i - k, tail)
                    rhs = rhs + UniPoly.monomial(i - k, coeff) * _b_at(w, k, j)
                if rhs != eval_f_at(w, i, j):
                    res.fail(w=w.word(), i=i, j=j)
    return res


def b_symmetry_check(n: int) -> CheckResult:
    """``b_{k,j}`` is symmetric in ``u_1..u_j`` and free of ``u_{j+1}..u_n``."""
    check_guard("b_symmetry_check", n, 1, 6)
    res = CheckResult(f"b-symmetry[n={n}]")
    for j in range(1, n + 1):
        names = [f"u{r}" for r in range(1, j + 1)]
        for k in range(j, n + 1):
            res.checked += 1
            poly = b(k, j, n)
            if not is_symmetric_in(poly, names):
                res.fail(k=k, j=j, reason="not symmetric")
            if poly.variables() - set(names) - {"t"}:
                res.fail(k=k, j=j, reason="depends on later u")
            if poly.degree() != 2 * (k - j + 1) or not poly.is_homogeneous():
                res.fail(k=k, j=j, reason="degree")
    return res


def t_zero_check(n: int) -> CheckResult:
    """``f_{i,j}`` at ``t = 0`` equals ``fcheck_{i,j}``, with degrees ``2(i - j + 1)``."""
    res = CheckResult(f"t-zero[n={n}]")
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            res.checked += 1
            full, closed = f(i, j, n), fcheck(i, j, n)
            if at_t_zero(full, n) != closed:
                res.fail(i=i, j=j, reason="specialization")
            if not (full.degree() == closed.degree() == 2 * (i - j + 1)):
                res.fail(i=i, j=j, reason="degree")
    return res


# -- Hilbert series and classical identities --------------------------------

def hilbert_closed_form(h: HessFn) -> UniPoly:
    """``prod_j (1 + s^2 + ... + s^{2(h(j) - j)})`` in ``s``."""
    out = UniPoly([1])
    for j in range(1, h.n + 1):
        out = out * UniPoly.q_integer(h(j) - j + 1).stretch(2)
    return out


def powersum_transition_check(n: int) -> CheckResult:
    """
    ``fcheck_{n, n+1-j} = sum_{i<j} (-1)^i e_i(x_{n+2-j}..x_n) p_{j-i}(x)``,
    so the generators ``fcheck_{n,*}`` and the power sums ``p_1..p_n`` are
    related by a unitriangular matrix.
    """
    check_guard("powersum_transition_check", n, 1, 6)
    res = CheckResult(f"powersum-transition[n={n}]")
    R = PolyRing.x_only(n)
    xs = R.gens()
    for j in range(1, n + 1):
        res.checked += 1
        tail = xs[n + 1 - j:]
        rhs = R.zero
        for i in range(j):
            rhs = rhs + (-1) ** i * elementary(i, tail) * power_sum(j - i, xs)
        if fcheck(n, n + 1 - j, n) != rhs:
            res.fail(j=j, reason="identity")
        # unit diagonal: the coefficient of p_j is e_0 = 1, and lower terms
        # carry strictly smaller power sums
        if elementary(0, tail) != 1:
            res.fail(j=j, reason="diagonal")
    return res


def peterson_reduction_check(n: int) -> CheckResult:
    """``f_{j+1,j} = f_{j,j-1} + (-p_{j-1} + 2 p_j - p_{j+1} - 2t) p_j`` for ``1 <= j <= n-1``."""
    check_guard("peterson_reduction_check", n, 1, 6)
    res = CheckResult(f"peterson-reduction[n={n}]")
    t = PolyRing.x_ring(n)["t"]
    for j in range(1, n):
        res.checked += 1
        lower = f(j, j - 1, n) if j > 1 else PolyRing.x_ring(n).zero
        rhs = lower + (-p(j - 1, n) + 2 * p(j, n) - p(j + 1, n) - 2 * t) * p(j, n)
        if f(j + 1, j, n) != rhs:
            res.fail(j=j)
    return res
