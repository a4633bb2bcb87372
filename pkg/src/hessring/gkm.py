"""
GKM description of ``H_T^*(Hess(S, h))``.

A class is a list ``(alpha(w))_{w in S_n}`` of polynomials in ``t_1..t_n``;
it lies in the image of localization when ``alpha(w) - alpha(w (j i))`` is
divisible by ``t_{w(j)} - t_{w(i)}`` for every ``j < i <= h(j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .guards import check_guard
from .hessenberg import HessFn, complex_dim, negative_roots
from .perm import Permutation, enumerate_sn, inv_h, inverse, transposition
from .polyring import MPoly, NotDivisible, PolyRing, UniPoly, divide_linear
from .presentation import CheckResult, fcheck

__all__ = [
    "GkmGraph", "GkmClass", "build_graph", "satisfies_gkm", "chern_class",
    "constant_class", "g_class", "tymoczko_act", "act_on_poly", "euler_class",
    "abbv_integral", "fcheck_gkm_identity", "poincare_polynomial",
    "invariant_degree0_dim", "export_graph",
]

GRAPH_GUARD = 7
ABBV_GUARD = 6


@dataclass(frozen=True)
class GkmGraph:
    """Vertices are ``S_n``; edges ``(w, w (j i), t_{w(j)} - t_{w(i)})``."""
    h: HessFn
    vertices: tuple[Permutation, ...]
    edges: tuple[tuple[Permutation, Permutation, tuple[int, int]], ...]

    @property
    def n(self) -> int:
        return self.h.n

    def label(self, a: int, b: int) -> MPoly:
        R = PolyRing.t_ring(self.n)
        return R[f"t{a}"] - R[f"t{b}"]

    def degree(self, w: Permutation) -> int:
        return sum(1 for u, v, _ in self.edges if u == w or v == w)


def build_graph(h: HessFn) -> GkmGraph:
    """Each undirected edge appears once, as ``(w, w', (w(j), w(i)))`` with ``w < w'``."""
    check_guard("build_graph", h.n, 1, GRAPH_GUARD)
    roots = sorted((j, i) for i, j in negative_roots(h))
    vertices = tuple(enumerate_sn(h.n))
    edges = []
    for w in vertices:
        for j, i in roots:
            w2 = w * transposition(h.n, j, i)
            if w < w2:
                edges.append((w, w2, (w(j), w(i))))
    return GkmGraph(h, vertices, tuple(edges))


@dataclass(frozen=True)
class GkmClass:
    h: HessFn
    values: dict[Permutation, MPoly]

    @property
    def n(self) -> int:
        return self.h.n

    def __call__(self, w: Permutation) -> MPoly:
        return self.values[w]

    def __add__(self, other: GkmClass) -> GkmClass:
        return GkmClass(self.h, {w: self.values[w] + other.values[w] for w in self.values})

    def __mul__(self, other) -> GkmClass:
        if isinstance(other, GkmClass):
            return GkmClass(self.h, {w: self.values[w] * other.values[w] for w in self.values})
        return GkmClass(self.h, {w: v * other for w, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, GkmClass) and self.h == other.h and self.values == other.values

    def __hash__(self):
        return hash((self.h, frozenset(self.values.items())))


def _from_function(h: HessFn, fn: Callable[[Permutation], MPoly]) -> GkmClass:
    return GkmClass(h, {w: fn(w) for w in enumerate_sn(h.n)})


def _divisible(p: MPoly, a: int, b: int) -> bool:
    # p is divisible by t_a - t_b iff it vanishes at t_a = t_b
    return p.substitute({f"t{a}": p.ring[f"t{b}"]}).is_zero()


def satisfies_gkm(c: GkmClass, graph: GkmGraph | None = None) -> bool:
    graph = graph or build_graph(c.h)
    if graph.h != c.h:
        raise ValueError("class and graph are over different Hessenberg functions")
    return all(_divisible(c(u) - c(v), a, b) for u, v, (a, b) in graph.edges)


def constant_class(i: int, h: HessFn) -> GkmClass:
    ti = PolyRing.t_ring(h.n)[f"t{i}"]
    return _from_function(h, lambda w: ti)


def unit_class(h: HessFn) -> GkmClass:
    one = PolyRing.t_ring(h.n).one
    return _from_function(h, lambda w: one)


def chern_class(i: int, h: HessFn) -> GkmClass:
    """The class ``w -> t_{w(i)}``."""
    R = PolyRing.t_ring(h.n)
    return _from_function(h, lambda w: R[f"t{w(i)}"])


def g_class(j: int, k: int, h: HessFn) -> GkmClass:
    """``w -> prod_{l=j+1}^{h(j)} (t_k - t_{w(l)})`` if ``k`` is among ``w(1..j)``, else ``0``."""
    R = PolyRing.t_ring(h.n)
    tk = R[f"t{k}"]

    def value(w: Permutation) -> MPoly:
        if k not in w.one_line[:j]:
            return R.zero
        out = R.one
        for l in range(j + 1, h(j) + 1):
            out = out * (tk - R[f"t{w(l)}"])
        return out

    return _from_function(h, value)


def act_on_poly(v: Permutation, poly: MPoly) -> MPoly:
    """``t_i -> t_{v(i)}`` on a polynomial in ``t_1..t_n``."""
    return poly.permute_vars({i - 1: v(i) - 1 for i in range(1, v.n + 1)})


def tymoczko_act(v: Permutation, c: GkmClass) -> GkmClass:
    """``(v . alpha)(w) = v . alpha(v^{-1} w)``."""
    if v.n != c.n:
        raise ValueError("size mismatch")
    vinv = inverse(v)
    return GkmClass(c.h, {w: act_on_poly(v, c(vinv * w)) for w in c.values})


def euler_class(w: Permutation, h: HessFn) -> MPoly:
    """``prod_{j < i <= h(j)} (t_{w(j)} - t_{w(i)})``."""
    R = PolyRing.t_ring(h.n)
    out = R.one
    for i, j in sorted(negative_roots(h)):
        out = out * (R[f"t{w(j)}"] - R[f"t{w(i)}"])
    return out


def _signed_pairs(w: Permutation, h: HessFn) -> tuple[int, set[tuple[int, int]]]:
    """``e_w = sign * prod_{(a,b) in pairs} (t_a - t_b)`` with every pair ``a < b``."""
    sign, pairs = 1, set()
    for i, j in negative_roots(h):
        a, b = w(j), w(i)
        if a > b:
            a, b = b, a
            sign = -sign
        pairs.add((a, b))
    return sign, pairs


class NotAClass(ArithmeticError):
    """The localization sum did not clear to a polynomial."""


def abbv_integral(c: GkmClass) -> MPoly:
    """
    ``sum_w alpha(w) / e_w`` as an exact polynomial.

    Every ``e_w`` divides ``L = prod_{a<b} (t_a - t_b)``; the sum is formed
    over ``L`` and then divided by each linear factor of ``L`` in turn.  A
    remainder means the input is not an equivariant class.
    """
    check_guard("abbv_integral", c.n, 1, ABBV_GUARD)
    n, h = c.n, c.h
    R = PolyRing.t_ring(n)
    all_pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    numerator = R.zero
    for w, alpha in c.values.items():
        if alpha.is_zero():
            continue
        sign, pairs = _signed_pairs(w, h)
        cofactor = R.const(sign)
        for a, b in all_pairs:
            if (a, b) not in pairs:
                cofactor = cofactor * (R[f"t{a}"] - R[f"t{b}"])
        numerator = numerator + alpha * cofactor
    out = numerator
    try:
        for a, b in all_pairs:
            out = divide_linear(out, f"t{a}", f"t{b}")
    except NotDivisible as exc:
        raise NotAClass(f"localization sum for h={h} has a nonzero denominator") from exc
    return out


def fcheck_gkm_identity(h: HessFn, j: int) -> CheckResult:
    """``fcheck_{h(j),j}(t_{w(1)}, ..., t_{w(n)}) = sum_k t_k g_{j,k}(w)`` at every ``w``."""
    check_guard("fcheck_gkm_identity", h.n, 1, 6)
    n = h.n
    R = PolyRing.t_ring(n)
    res = CheckResult(f"fcheck-gkm[{h}, j={j}]")
    poly = fcheck(h(j), j, n)
    gs = [g_class(j, k, h) for k in range(1, n + 1)]
    for w in enumerate_sn(n):
        res.checked += 1
        lhs = poly.substitute({f"x{i}": R[f"t{w(i)}"] for i in range(1, n + 1)}, R)
        rhs = R.zero
        for k in range(1, n + 1):
            rhs = rhs + R[f"t{k}"] * gs[k - 1](w)
        if lhs != rhs:
            res.fail(h=str(h), j=j, w=w.word())
    return res


def poincare_polynomial(h: HessFn) -> UniPoly:
    """``sum_w q^{inv_h(w)}``, where ``q`` tracks ``H^{2j}``."""
    check_guard("poincare_polynomial", h.n, 1, GRAPH_GUARD)
    counts = [0] * (complex_dim(h) + 1)
    for w in enumerate_sn(h.n):
        counts[inv_h(w, h)] += 1
    return UniPoly(counts)


def invariant_degree0_dim(h: HessFn, graph: GkmGraph | None = None) -> int:
    """
    Dimension of the degree-0 classes fixed by every ``v`` in ``S_n``.

    A degree-0 class is a vector in ``Q^{S_n}``; the GKM condition forces
    equal values across each edge and invariance forces ``alpha(v^{-1} w) =
    alpha(w)``.  The solution space is counted by union-find over these
    equalities (equivalently, the nullity of the constraint matrix).
    """
    graph = graph or build_graph(h)
    parent = {w: w for w in graph.vertices}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for u, v, _ in graph.edges:
        union(u, v)
    gens = [transposition(h.n, m, m + 1) for m in range(1, h.n)]
    for s in gens:
        for w in graph.vertices:
            union(w, s * w)
    return len({find(w) for w in graph.vertices})


def export_graph(graph: GkmGraph) -> dict:
    """Adjacency-list JSON payload: one-line words and label strings."""
    return {
        "h": str(graph.h),
        "vertices": [w.word() for w in graph.vertices],
        "edges": [{"from": u.word(), "to": v.word(), "label": str(graph.label(a, b))}
                  for u, v, (a, b) in graph.edges],
    }


def chern_products(h: HessFn, max_factors: int) -> Iterable[tuple[tuple[int, ...], GkmClass]]:
    """Products of Chern classes with up to ``max_factors`` factors (nondecreasing indices)."""
    import itertools

    chern = [chern_class(i, h) for i in range(1, h.n + 1)]
    for r in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(range(1, h.n + 1), r):
            out = chern[combo[0] - 1]
            for i in combo[1:]:
                out = out * chern[i - 1]
            yield combo, out
