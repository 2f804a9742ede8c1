"""Brute-force oracles: permutation, o-polynomial, hyperoval, inverse.

Everything here is exhaustive by design; caps keep accidental huge runs from
starting.  Verdicts come with re-checkable counterexamples: a colliding input
pair, a failing shift, or a collinear point triple.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .backend import kernels
from .errors import CapError, FieldError, NotPermutationError
from .field import FieldCtx
from .poly import TermPoly, interpolate

PP_CAP = 1 << 24
OPOLY_CAP = 1 << 12
HYPEROVAL_CAP = 1 << 7


@dataclass
class VerifyReport:
    """Outcome of one exhaustive check; false verdicts carry a counterexample."""

    verdict: bool
    counterexample: dict | None
    domain_size: int
    elapsed_ms: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict:
        d = {
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "domain_size": self.domain_size,
            "elapsed_ms": self.elapsed_ms if timings else 0,
        }
        d.update(self.extra)
        return d


def _table_of(f, ctx: FieldCtx | None) -> tuple[np.ndarray, FieldCtx]:
    if isinstance(f, np.ndarray):
        if ctx is None:
            raise FieldError("raw value tables need an explicit field context")
        return np.asarray(f, dtype=np.int64), ctx
    return f.table(), f.ctx


def is_permutation(f, ctx: FieldCtx | None = None, cap: int = PP_CAP) -> VerifyReport:
    """Bitmap-style permutation check with deterministic first collision."""
    values, ctx = _table_of(f, ctx)
    if ctx.q > cap:
        raise CapError(f"permutation check over GF({ctx.q}) exceeds cap {cap}")
    t0 = time.perf_counter()
    ok, x1, x2 = kernels().perm_scan(values)
    ms = int((time.perf_counter() - t0) * 1000)
    if ok:
        return VerifyReport(True, None, ctx.q, ms)
    ce = {"kind": "collision", "x1": int(x1), "x2": int(x2),
          "value": int(values[x1])}
    return VerifyReport(False, ce, ctx.q, ms)


def is_permutation_sorted(f, ctx: FieldCtx | None = None,
                          cap: int = PP_CAP) -> VerifyReport:
    """Independent sort-based permutation oracle; same counterexample rule."""
    values, ctx = _table_of(f, ctx)
    if ctx.q > cap:
        raise CapError(f"permutation check over GF({ctx.q}) exceeds cap {cap}")
    t0 = time.perf_counter()
    order = np.argsort(values, kind="stable")
    sv = values[order]
    eq = sv[1:] == sv[:-1]
    ms = int((time.perf_counter() - t0) * 1000)
    if not eq.any():
        return VerifyReport(True, None, ctx.q, ms)
    x2_cands = order[1:][eq]
    j = int(np.argmin(x2_cands))
    x2 = int(x2_cands[j])
    v = int(values[x2])
    x1 = int(np.flatnonzero(values == v)[0])
    return VerifyReport(False, {"kind": "collision", "x1": x1, "x2": x2,
                                "value": v}, ctx.q, ms)


def is_opolynomial(f, ctx: FieldCtx | None = None,
                   cap: int = OPOLY_CAP) -> VerifyReport:
    """Full definition check over GF(2^m): f(0) = 0, f a permutation, and
    (f(x+s) + f(s)) * x^(q-2) a permutation for every shift s (s = 0 first).
    """
    values, ctx = _table_of(f, ctx)
    if ctx.p != 2:
        raise FieldError("o-polynomials live over characteristic 2 only")
    if ctx.q > cap:
        raise CapError(f"o-polynomial check over GF({ctx.q}) exceeds cap {cap}")
    t0 = time.perf_counter()
    if values[0] != 0:
        ms = int((time.perf_counter() - t0) * 1000)
        return VerifyReport(False, {"kind": "nonzero_at_zero",
                                    "value": int(values[0])}, ctx.q, ms)
    perm = is_permutation(values, ctx)
    if not perm.verdict:
        perm.counterexample["kind"] = "not_permutation"
        perm.elapsed_ms = int((time.perf_counter() - t0) * 1000)
        return perm
    expt, logt = ctx.exp_log_np()
    invt = ctx.inv0_table()
    ok, s, x1, x2 = kernels().opoly_scan(values, expt, logt, invt)
    ms = int((time.perf_counter() - t0) * 1000)
    if ok:
        return VerifyReport(True, None, ctx.q, ms)
    return VerifyReport(False, {"kind": "shift", "s": int(s),
                                "x1": int(x1), "x2": int(x2)}, ctx.q, ms)


@dataclass(frozen=True)
class ProjPoint:
    """A point of PG(2, q): nonzero triple scaled so its first nonzero entry is 1."""

    x: int
    y: int
    z: int

    @classmethod
    def make(cls, ctx: FieldCtx, x: int, y: int, z: int) -> "ProjPoint":
        if x == 0 and y == 0 and z == 0:
            raise FieldError("the zero triple is not a projective point")
        lead = x if x else (y if y else z)
        if lead != 1:
            s = ctx.inv(lead)
            x, y, z = ctx.mul(s, x), ctx.mul(s, y), ctx.mul(s, z)
        return cls(x, y, z)


def hyperoval_points(f, ctx: FieldCtx | None = None) -> list[ProjPoint]:
    """The q + 2 points {(1, t, f(t))} plus (0,1,0) and (0,0,1)."""
    values, ctx = _table_of(f, ctx)
    pts = [ProjPoint.make(ctx, 1, t, int(values[t])) for t in range(ctx.q)]
    pts.append(ProjPoint(0, 1, 0))
    pts.append(ProjPoint(0, 0, 1))
    return pts


def hyperoval_check(f, ctx: FieldCtx | None = None,
                    cap: int = HYPEROVAL_CAP) -> VerifyReport:
    """No-three-collinear check of the point set attached to f.

    Preconditions: characteristic 2, f(0) = 0, f(1) = 1.  O(q^3) triples.
    """
    values, ctx = _table_of(f, ctx)
    if ctx.p != 2:
        raise FieldError("hyperovals live in even-order planes only")
    if values[0] != 0 or values[1] != 1:
        raise FieldError("hyperoval check needs f(0) = 0 and f(1) = 1; "
                         "normalize first")
    if ctx.q > cap:
        raise CapError(f"collinearity check over GF({ctx.q}) exceeds cap {cap}")
    t0 = time.perf_counter()
    pts = hyperoval_points(values, ctx)
    if len(set(pts)) != ctx.q + 2:  # pragma: no cover - distinct by construction
        return VerifyReport(False, {"kind": "duplicate_points"}, ctx.q)
    px = np.array([p.x for p in pts], dtype=np.int64)
    py = np.array([p.y for p in pts], dtype=np.int64)
    pz = np.array([p.z for p in pts], dtype=np.int64)
    expt, logt = ctx.exp_log_np()
    ok, i, j, k = kernels().collinear_scan(px, py, pz, expt, logt)
    ms = int((time.perf_counter() - t0) * 1000)
    if ok:
        return VerifyReport(True, None, ctx.q, ms)
    tri = [[int(px[t]), int(py[t]), int(pz[t])] for t in (i, j, k)]
    return VerifyReport(False, {"kind": "collinear", "indices": [int(i), int(j), int(k)],
                                "points": tri}, ctx.q, ms)


def compositional_inverse(f, ctx: FieldCtx | None = None) -> TermPoly:
    """The reduced polynomial g with g(f(x)) = x everywhere.

    Rejects non-permutations with the colliding pair.  Built by inverting the
    value table and interpolating.
    """
    values, ctx = _table_of(f, ctx)
    rep = is_permutation(values, ctx)
    if not rep.verdict:
        raise NotPermutationError("compositional inverse needs a permutation",
                                  rep.counterexample)
    inv_table = np.empty(ctx.q, dtype=np.int64)
    inv_table[values] = np.arange(ctx.q, dtype=np.int64)
    return interpolate(inv_table, ctx)
