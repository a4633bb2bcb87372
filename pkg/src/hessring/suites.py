"""
Verification suites: named, independent checks assembled into a report.

A check is a ``(check_id, function, args)`` triple; functions are
module-level so that checks can run in worker processes.  Each returns
``None`` (or :class:`Passed` carrying details) on success, or a witness
(any JSON-serializable payload) on failure.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from .guards import GuardError
from .hessenberg import (ConsistencyError, HessFn, complex_dim, enumerate_hn,
                         fixed_points, split_at, split_fixed_points)
from .perm import d_set, enumerate_sn, minimal_hess, minimal_hess_formula
from .polyring import GradedPiece, MPoly, PolyRing, hilbert_series, is_regular_sequence
from . import gkm, presentation as pres, symfunc

SUITES = ("fixed-points", "presentation", "hilbert", "gkm", "symfunc", "appendix")

SCHEMA_VERSION = 1


@dataclass
class Passed:
    detail: Any


@dataclass
class CheckRecord:
    id: str
    status: str  # "pass" | "fail" | "skipped"
    witness: Any = None
    elapsed_ms: float | None = None
    detail: Any = None

    def as_dict(self) -> dict:
        out = {"id": self.id, "status": self.status, "witness": self.witness,
               "elapsed_ms": self.elapsed_ms}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def as_dict(self, config: dict | None = None) -> dict:
        return {"schema": SCHEMA_VERSION, "suite": self.suite, "config": config or {},
                "checks": [r.as_dict() for r in self.records], "summary": self.summary}


Check = tuple[str, Callable[..., Any], tuple]


def _from_result(res: pres.CheckResult):
    return None if res.ok else {"checked": res.checked, "failures": res.failures[:5]}


# -- fixed points ---------------------------------------------------------

def check_minimal_hess(n: int):
    for w in enumerate_sn(n):
        hw = minimal_hess(w)
        for j in range(1, n + 1):
            nonempty = bool(d_set(w, j))
            if nonempty and hw(j) != minimal_hess_formula(w, j):
                return {"w": w.word(), "j": j, "reason": "max formula"}
            prefix = set(w.one_line[:j])
            if (not nonempty) != (prefix == set(range(1, j + 1))):
                return {"w": w.word(), "j": j, "reason": "empty D_w(j) criterion"}
            if nonempty and j <= n - 1:
                corner = hw(j) == w.position_of(w(j) - 1)
                if corner != (hw(j - 1) < hw(j)):
                    return {"w": w.word(), "j": j, "reason": "corner lemma"}
    return None


def check_fixed_points(h: HessFn):
    try:
        points = fixed_points(h)
    except ConsistencyError as exc:
        return {"reason": str(exc)}
    expected = pres.hilbert_closed_form(h)(1)
    if len(points) != expected:
        return {"count": len(points), "hilbert_at_1": expected}
    for r in range(1, h.n):
        if h(r) == r:
            if split_fixed_points(h, r) != points:
                return {"split_at": r, "halves": [str(x) for x in split_at(h, r)]}
    return None


# -- presentation ---------------------------------------------------------

def check_t_zero(n: int):
    return _from_result(pres.t_zero_check(n))


def check_vanishing(h: HessFn):
    return _from_result(pres.fixed_point_vanishing(h))


def check_swap(n: int):
    return _from_result(pres.swap_stability_check(n))


def check_peterson(n: int):
    return _from_result(pres.peterson_reduction_check(n))


def check_powersum(n: int):
    return _from_result(pres.powersum_transition_check(n))


def check_eval_routes(n: int):
    for w in enumerate_sn(n):
        for j in range(1, n + 1):
            for i in range(j, n + 1):
                if pres.eval_f_at(w, i, j) != pres.eval_f_by_substitution(w, i, j):
                    return {"w": w.word(), "i": i, "j": j}
    return None


# -- hilbert --------------------------------------------------------------

def hilbert_routes(h: HessFn, max_degree: int | None = None) -> dict[str, Any]:
    closed = pres.hilbert_closed_form(h)
    top = closed.degree() + 2
    if max_degree is not None:
        top = min(top, max_degree)
    ring = PolyRing.x_only(h.n)
    return {
        "closed_form": closed.truncate(top),
        "icheck": hilbert_series(pres.ideal_Icheck(h), top, ring),
        "mbirika_J": hilbert_series(pres.ideal_J(h), top, ring),
    }


def check_hilbert(h: HessFn, max_degree: int | None = None):
    routes = hilbert_routes(h, max_degree)
    values = list(routes.values())
    shown = {k: v.to_str("s") for k, v in routes.items()}
    if all(v == values[0] for v in values):
        return Passed(shown)
    return shown


def check_regular(h: HessFn):
    return None if is_regular_sequence(pres.ideal_Icheck(h)) else {"h": str(h)}


def mbirika_tymoczko_distinction() -> dict[str, Any]:
    """
    For the Peterson variety at ``n = 3``: in ``Q[x]/J_h`` the class of
    ``x3`` is nonzero with zero square, while in ``Q[x]/Icheck_h`` the
    squaring map on the degree-2 piece is an anisotropic binary quadratic form.
    """
    h = HessFn.peterson(3)
    ring = PolyRing.x_only(3)
    x1, x2, x3 = ring.gens()
    J = pres.ideal_J(h)
    J2, J4 = GradedPiece(J, 2, ring), GradedPiece(J, 4, ring)
    x3_nonzero = any(J2.reduce(x3))
    x3_square_zero = J4.is_zero(x3 * x3)

    I = pres.ideal_Icheck(h)
    I2, I4 = GradedPiece(I, 2, ring), GradedPiece(I, 4, ring)
    basis2 = [MPoly(ring, {e: 1}) for e in I2.basis]
    # (a u + b v)^2 = a^2 u^2 + 2ab uv + b^2 v^2, read in the 1-dim degree-4 piece
    u, v = basis2
    A = I4.reduce(u * u)[0]
    B = 2 * I4.reduce(u * v)[0]
    C = I4.reduce(v * v)[0]
    disc = B * B - 4 * A * C
    return {
        "J_deg2_dim": J2.dim, "J_deg4_dim": J4.dim,
        "x3_nonzero": x3_nonzero, "x3_square_zero": x3_square_zero,
        "Icheck_deg2_dim": I2.dim, "Icheck_deg4_dim": I4.dim,
        "form": [str(A), str(B), str(C)], "discriminant": str(disc),
        "anisotropic": not _is_rational_square(disc) and A != 0,
    }


def _is_rational_square(q: Fraction) -> bool:
    from math import isqrt

    q = Fraction(q)
    if q < 0:
        return False
    a, b = q.numerator, q.denominator
    return isqrt(a) ** 2 == a and isqrt(b) ** 2 == b


def check_mbirika_tymoczko():
    out = mbirika_tymoczko_distinction()
    good = (out["x3_nonzero"] and out["x3_square_zero"] and out["anisotropic"]
            and out["Icheck_deg2_dim"] == 2 and out["Icheck_deg4_dim"] == 1)
    return None if good else out


# -- gkm ------------------------------------------------------------------

def check_gkm(h: HessFn):
    """Class constructions, the action, Euler classes and localization for one ``h``."""
    n = h.n
    graph = gkm.build_graph(h)
    d = complex_dim(h)
    if any(graph.degree(w) != d for w in graph.vertices):
        return {"reason": "graph is not regular of degree dim"}
    gs = {(j, k): gkm.g_class(j, k, h) for j in range(1, n + 1) for k in range(1, n + 1)}
    for (j, k), c in gs.items():
        if not gkm.satisfies_gkm(c, graph):
            return {"reason": "g class fails GKM", "j": j, "k": k}
    for j in range(1, n + 1):
        res = gkm.fcheck_gkm_identity(h, j)
        if not res.ok:
            return {"reason": "fcheck identity", "failures": res.failures[:3]}
    chern = [gkm.chern_class(i, h) for i in range(1, n + 1)]
    R = PolyRing.t_ring(n)
    for v in enumerate_sn(n):
        for i, c in enumerate(chern, start=1):
            if gkm.tymoczko_act(v, c) != c:
                return {"reason": "Chern class not invariant", "v": v.word(), "i": i}
            const = gkm.constant_class(i, h)
            if gkm.tymoczko_act(v, const) != gkm.constant_class(v(i), h):
                return {"reason": "constant class action", "v": v.word(), "i": i}
        for w in enumerate_sn(n):
            if gkm.euler_class(v * w, h) != gkm.act_on_poly(v, gkm.euler_class(w, h)):
                return {"reason": "e_vw != v.e_w", "v": v.word(), "w": w.word()}
    if d > 0 and not gkm.abbv_integral(gkm.unit_class(h)).is_zero():
        return {"reason": "integral of 1 is nonzero"}
    try:
        for combo, c in gkm.chern_products(h, d):
            value = gkm.abbv_integral(c)
            if value.total_degree() not in (-1, len(combo) - d):
                return {"reason": "integral has wrong degree", "factors": list(combo)}
    except gkm.NotAClass as exc:
        return {"reason": str(exc)}
    if gkm.invariant_degree0_dim(h, graph) != 1:
        return {"reason": "degree-0 invariants are not 1-dimensional"}
    return None


# -- symfunc --------------------------------------------------------------

def check_symfunc(h: HessFn):
    X = symfunc.chromatic_qsym(h)
    schur = symfunc.expand_in_schur(X)
    ones = (1,) * h.n
    trivial = schur.coeff(ones)
    if trivial != symfunc.sw_trivial_coeff(h):
        return {"reason": "s_{1^n} coefficient", "got": str(trivial)}
    if trivial.stretch(2) != pres.hilbert_closed_form(h):
        return {"reason": "trivial coefficient vs Hilbert series"}
    betti = symfunc.betti_from_xg(h)
    if betti != gkm.poincare_polynomial(h):
        return {"reason": "Betti routes disagree", "xg": str(betti),
                "inv_h": str(gkm.poincare_polynomial(h))}
    from math import factorial
    if betti(1) != factorial(h.n):
        return {"reason": "total Betti number is not n!"}
    return None


# -- appendix -------------------------------------------------------------

def check_appendix(n: int):
    return _from_result(pres.appendix_identity_check(n))


def check_b_symmetry(n: int):
    return _from_result(pres.b_symmetry_check(n))


# -- assembly -------------------------------------------------------------

def build_checks(suite: str, n: int, hs: list[HessFn],
                 max_degree: int | None = None) -> list[Check]:
    chosen = SUITES if suite == "all" else (suite,)
    checks: list[Check] = []
    for name in chosen:
        if name == "fixed-points":
            checks.append((f"fixed-points/minimal-hess[n={n}]", check_minimal_hess, (n,)))
            checks += [(f"fixed-points/criteria[{h}]", check_fixed_points, (h,)) for h in hs]
        elif name == "presentation":
            checks.append((f"presentation/t-zero[n={n}]", check_t_zero, (n,)))
            checks.append((f"presentation/eval-routes[n={n}]", check_eval_routes, (n,)))
            checks.append((f"presentation/swap-stability[n={n}]", check_swap, (n,)))
            checks.append((f"presentation/peterson[n={n}]", check_peterson, (n,)))
            checks.append((f"presentation/powersum[n={n}]", check_powersum, (n,)))
            checks += [(f"presentation/vanishing[{h}]", check_vanishing, (h,)) for h in hs]
        elif name == "hilbert":
            for h in hs:
                checks.append((f"hilbert/three-routes[{h}]", check_hilbert, (h, max_degree)))
                checks.append((f"hilbert/regular-sequence[{h}]", check_regular, (h,)))
            if any(h == HessFn.peterson(3) for h in hs):
                checks.append(("hilbert/mbirika-tymoczko[2,3,3]", check_mbirika_tymoczko, ()))
        elif name == "gkm":
            checks += [(f"gkm/classes[{h}]", check_gkm, (h,)) for h in hs]
        elif name == "symfunc":
            checks += [(f"symfunc/xg[{h}]", check_symfunc, (h,)) for h in hs]
        elif name == "appendix":
            checks.append((f"appendix/identity[n={n}]", check_appendix, (n,)))
            checks.append((f"appendix/b-symmetry[n={n}]", check_b_symmetry, (n,)))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return checks


def run_check(check: Check, timings: bool = False) -> CheckRecord:
    check_id, fn, args = check
    start = time.perf_counter()
    detail = None
    try:
        witness = fn(*args)
        if isinstance(witness, Passed):
            detail, witness = witness.detail, None
        status = "pass" if witness is None else "fail"
    except GuardError as exc:
        witness, status = {"skipped": str(exc)}, "skipped"
    except Exception as exc:  # a crash is a failure with the exception as witness
        witness, status = {"error": f"{type(exc).__name__}: {exc}"}, "fail"
    elapsed = round((time.perf_counter() - start) * 1000, 1) if timings else None
    return CheckRecord(check_id, status, witness, elapsed, detail)


def run_checks(suite: str, checks: Iterable[Check], jobs: int | None = None,
               timings: bool = False) -> Report:
    checks = list(checks)
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(checks) <= 1:
        records = [run_check(c, timings) for c in checks]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(checks))) as pool:
            records = list(pool.map(run_check, checks, [timings] * len(checks)))
    # pool.map preserves submission order, so the report order is fixed
    return Report(suite, records)


def hess_functions(n: int | None, h: HessFn | None) -> tuple[int, list[HessFn]]:
    if h is not None:
        return h.n, [h]
    if n is None:
        raise ValueError("either n or h is required")
    return n, list(enumerate_hn(n))
