"""Sparse polynomials and opaque evaluators over a field context.

TermPoly is a list of (exponent, coefficient) terms with exponents resolved
mod q-1 at bind time, so one symbolic description (e.g. with fractional
exponents) serves every field it is bound to.  PolyFn wraps an arbitrary
encoding-to-encoding evaluator for maps that have no convenient closed
coefficient form.  Both expose the same small surface: eval_enc, __call__,
and a cached full value table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .errors import CapError, FieldError, SpecParseError
from .field import FieldCtx, FieldElem, FracExp

INTERP_CAP = 4096


class TermPoly:
    """Immutable sparse polynomial over a fixed field context.

    ``terms`` keeps the formal exponents as given (for faithful text
    round-trips); ``resolved`` holds (resolved exponent, coefficient) pairs
    sorted by exponent, with like terms merged and zero coefficients dropped.
    """

    __slots__ = ("ctx", "terms", "resolved", "_table")

    def __init__(self, ctx: FieldCtx, terms, merge: bool = True):
        self.ctx = ctx
        norm = []
        for e, c in terms:
            if not isinstance(e, FracExp):
                e = FracExp(int(e))
            c = c.enc if isinstance(c, FieldElem) else int(c)
            if not 0 <= c < ctx.q:
                raise FieldError(f"coefficient {c} outside [0, {ctx.q})")
            norm.append((e, c))
        merged: dict[int, int] = {}
        for e, c in norm:
            r = e.resolve(ctx.q)
            if r in merged:
                if not merge:
                    raise FieldError(f"duplicate resolved exponent {r}")
                merged[r] = ctx.add(merged[r], c)
            else:
                merged[r] = c
        self.terms = tuple((e, c) for e, c in norm if c)
        self.resolved = tuple(sorted((r, c) for r, c in merged.items() if c))
        self._table = None

    def eval_enc(self, x: int) -> int:
        acc = 0
        ctx = self.ctx
        for r, c in self.resolved:
            acc = ctx.add(acc, ctx.mul(c, ctx.pow(x, r)))
        return acc

    def __call__(self, x: FieldElem) -> FieldElem:
        if x.ctx is not self.ctx:
            raise FieldError("argument from a different field context")
        return FieldElem(self.ctx, self.eval_enc(x.enc))

    def table(self) -> np.ndarray:
        """Value table over the whole field (cached)."""
        if self._table is None:
            ctx = self.ctx
            if ctx.ensure_tables():
                expt, logt = ctx.exp_log_np()
                exps = np.array([r for r, _ in self.resolved], dtype=np.int64)
                cofs = np.array([c for _, c in self.resolved], dtype=np.int64)
                t = kernels().eval_terms_scan(exps, cofs, expt, logt,
                                              ctx.p, ctx.n, ctx.q)
            else:
                t = np.array([self.eval_enc(x) for x in range(ctx.q)],
                             dtype=np.int64)
            t.setflags(write=False)
            self._table = t
        return self._table

    def degree(self) -> int:
        return self.resolved[-1][0] if self.resolved else 0

    def scale(self, c: int) -> "TermPoly":
        ctx = self.ctx
        return TermPoly(ctx, [(e, ctx.mul(co, c)) for e, co in self.terms])

    def text(self) -> str:
        return ",".join(f"{e}:{c}" for e, c in self.terms)

    def __eq__(self, other):
        return (isinstance(other, TermPoly) and other.ctx is self.ctx
                and other.resolved == self.resolved)

    def __hash__(self):
        return hash((id(self.ctx), self.resolved))

    def __repr__(self):
        return f"TermPoly({self.text() or '0'} @ GF({self.ctx.q}))"


class PolyFn:
    """A black-box map of the field given by an encoding evaluator."""

    __slots__ = ("ctx", "fn", "name", "_table")

    def __init__(self, ctx: FieldCtx, fn, name: str = ""):
        self.ctx = ctx
        self.fn = fn
        self.name = name
        self._table = None

    def eval_enc(self, x: int) -> int:
        return self.fn(x)

    def __call__(self, x: FieldElem) -> FieldElem:
        if x.ctx is not self.ctx:
            raise FieldError("argument from a different field context")
        return FieldElem(self.ctx, self.fn(x.enc))

    def table(self) -> np.ndarray:
        if self._table is None:
            t = np.fromiter((self.fn(x) for x in range(self.ctx.q)),
                            dtype=np.int64, count=self.ctx.q)
            t.setflags(write=False)
            self._table = t
        return self._table

    def __repr__(self):
        return f"PolyFn({self.name or '<fn>'} @ GF({self.ctx.q}))"


def from_table(ctx: FieldCtx, values, name: str = "table") -> PolyFn:
    values = np.asarray(values, dtype=np.int64)
    fn = PolyFn(ctx, lambda x: int(values[x]), name)
    fn._table = values
    return fn


def identity(ctx: FieldCtx) -> TermPoly:
    return TermPoly(ctx, [(1, 1)])


def monomial(ctx: FieldCtx, e, c: int = 1) -> TermPoly:
    return TermPoly(ctx, [(e, c)])


def constant(ctx: FieldCtx, c: int) -> TermPoly:
    return TermPoly(ctx, [(0, c)])


def compose(f, g) -> PolyFn:
    """Pointwise f(g(x))."""
    if f.ctx is not g.ctx:
        raise FieldError("composition needs a common field context")
    return PolyFn(f.ctx, lambda x: f.eval_enc(g.eval_enc(x)), name="compose")


# ---------------------------------------------------------------------------
# Dickson polynomials of the first kind.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DicksonSpec:
    """Order h >= 1 and parameter a (an encoding in the target field)."""

    h: int
    a: int = 1

    def __post_init__(self):
        if self.h < 1:
            raise FieldError("Dickson order must be >= 1")


def _dickson_closed_terms(spec: DicksonSpec, ctx: FieldCtx) -> dict[int, int]:
    """Exponent -> coefficient dict from the closed binomial formula.

    The integer factor h/(h-i) * C(h-i, i) is computed exactly in the
    integers (it is always integral) and only then reduced mod p, which
    avoids modular division when p divides h-i.
    """
    h, a = spec.h, spec.a
    out: dict[int, int] = {}
    for i in range(h // 2 + 1):
        num = h * math.comb(h - i, i)
        assert num % (h - i) == 0
        c = (num // (h - i)) % ctx.p
        coef = ctx.mul(c, ctx.pow_int(ctx.neg(a), i))
        if coef:
            out[h - 2 * i] = coef
    return out


def _dickson_recurrence_terms(spec: DicksonSpec, ctx: FieldCtx) -> dict[int, int]:
    """Same dict via D_h = x*D_{h-1} - a*D_{h-2}, D_0 = 2, D_1 = x."""
    a = spec.a
    prev = {0: 2 % ctx.p}          # D_0
    cur = {1: 1}                   # D_1
    if spec.h == 1:
        return cur
    for _ in range(spec.h - 1):
        nxt: dict[int, int] = {}
        for e, c in cur.items():
            nxt[e + 1] = c
        for e, c in prev.items():
            d = ctx.neg(ctx.mul(a, c))
            nxt[e] = ctx.add(nxt.get(e, 0), d)
        prev, cur = cur, {e: c for e, c in nxt.items() if c}
    return cur


def dickson(spec: DicksonSpec, ctx: FieldCtx) -> TermPoly:
    """Dickson polynomial of the first kind, cross-checked against its recurrence."""
    closed = _dickson_closed_terms(spec, ctx)
    rec = _dickson_recurrence_terms(spec, ctx)
    if closed != rec:  # pragma: no cover - the two derivations always agree
        raise AssertionError(
            f"Dickson closed form and recurrence disagree for h={spec.h}")
    return TermPoly(ctx, sorted(closed.items()))


# ---------------------------------------------------------------------------
# Additive (p-)polynomials.
# ---------------------------------------------------------------------------

def linearized(ctx: FieldCtx, coeffs) -> TermPoly:
    """Polynomial sum(c_j x^(p^j)) from (j, c_j) pairs; GF(p)-linear as a map."""
    return TermPoly(ctx, [(ctx.p ** j, c) for j, c in coeffs])


# ---------------------------------------------------------------------------
# Interpolation and normalization.
# ---------------------------------------------------------------------------

def interpolate(f, ctx: FieldCtx | None = None, cap: int = INTERP_CAP) -> TermPoly:
    """The unique reduced polynomial of degree < q matching f everywhere.

    f may be a TermPoly / PolyFn or a raw value table.  O(q^2); rejected above
    the cap.  The result is re-evaluated against the input before returning.
    """
    if ctx is None:
        ctx = f.ctx
    if ctx.q > cap:
        raise CapError(
            f"interpolation over GF({ctx.q}) exceeds the cap {cap}; "
            "evaluate the map directly instead")
    values = f if isinstance(f, np.ndarray) else f.table()
    expt, logt = ctx.exp_log_np()
    coeffs = kernels().interp_scan(np.asarray(values, dtype=np.int64),
                                   expt, logt, ctx.p, ctx.n)
    out = TermPoly(ctx, [(e, int(c)) for e, c in enumerate(coeffs) if c])
    if not np.array_equal(out.table(), values):  # pragma: no cover
        raise AssertionError("interpolation failed to reproduce the value table")
    return out


def normalize_opoly(f):
    """Scale f by f(1)^(-1) so the result fixes 1; rejects f(1) = 0."""
    ctx = f.ctx
    f1 = f.eval_enc(1)
    if f1 == 0:
        raise FieldError("cannot normalize: f(1) = 0")
    if f1 == 1:
        return f
    s = ctx.inv(f1)
    if isinstance(f, TermPoly):
        return f.scale(s)
    return PolyFn(ctx, lambda x: ctx.mul(s, f.eval_enc(x)),
                  name=f"normalized({getattr(f, 'name', '')})")


# ---------------------------------------------------------------------------
# Polynomial text format: comma-separated EXP:COEFF with EXP = INT or U/V.
# ---------------------------------------------------------------------------

def parse_poly_spec(ctx: FieldCtx, text: str) -> TermPoly:
    s = "".join(text.split())
    if not s:
        return TermPoly(ctx, [])
    terms = []
    for piece in s.split(","):
        if ":" not in piece:
            raise SpecParseError(f"term {piece!r} lacks ':' in {text!r}")
        es, _, cs = piece.partition(":")
        try:
            if "/" in es:
                u, _, v = es.partition("/")
                e = FracExp(int(u), int(v))
            else:
                e = FracExp(int(es))
            c = int(cs)
        except (ValueError, FieldError) as exc:
            raise SpecParseError(f"bad term {piece!r} in {text!r}: {exc}") from None
        terms.append((e, c))
    try:
        return TermPoly(ctx, terms, merge=False)
    except FieldError as exc:
        raise SpecParseError(f"{exc} in {text!r}") from None
