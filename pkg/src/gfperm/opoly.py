"""The catalog of o-polynomial families over GF(2^m).

Families: translation, segre, glynni, glynnii, cherowitzo, payne (closed
coefficient forms), subiaco and adelaide (evaluators; both involve
inverse-or-zero factors, and adelaide runs quadratic-extension arithmetic
inside a GF(q) -> GF(q) map).  Alongside the families: the hyperoval-
preserving transforms, the o-monomial criteria and exponent orbit, and the
closed-form compositional inverses the source theorems state.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache

from .errors import FieldError, SpecParseError
from .field import FieldCtx, FracExp, build_field, canonical_quad_ext
from .poly import DicksonSpec, PolyFn, TermPoly, dickson, monomial
from .verify import VerifyReport, compositional_inverse, is_permutation

FAMILY_TAGS = ("translation", "segre", "glynni", "glynnii", "cherowitzo",
               "payne", "subiaco", "adelaide")

# external id grammar: tag[:key=value[,key=value...]]
FAMILY_SCHEMAS = {
    "translation": {"h": "frobenius power, gcd(h, m) = 1"},
    "segre": {"a": "field element (any)"},
    "glynni": {},
    "glynnii": {"a": "field element (any)"},
    "cherowitzo": {"a": "field element (any)"},
    "payne": {"a": "field element (any)"},
    "subiaco": {"a": "field element, Tr(1/a) = 1 (and a outside GF(4) when m = 2 mod 4)"},
    "adelaide": {"b": "GF(q^2) element with b^(q+1) = 1, b != 1",
                 "sign": "+ or - for the exponent (q-1)/3"},
}


@lru_cache(maxsize=None)
def field_gf2m(m: int) -> FieldCtx:
    """Shared canonical GF(2^m) context."""
    return build_field(2, m)


@dataclass(frozen=True)
class FamilySpec:
    """One catalog entry: family tag, extension degree m, and its parameters."""

    family: str
    m: int
    h: int | None = None
    a: int | None = None
    b: int | None = None      # quadratic-extension encoding (adelaide)
    sign: int = 1             # adelaide: sign of the exponent (q-1)/3

    def validate(self, ctx: FieldCtx) -> None:
        fam, m = self.family, self.m
        if fam not in FAMILY_TAGS:
            raise FieldError(f"unknown family {fam!r}")
        if ctx.p != 2 or ctx.n != m:
            raise FieldError(f"{fam} at m={m} needs the field GF(2^{m})")
        if fam == "translation":
            if self.h is None or math.gcd(self.h, m) != 1:
                raise FieldError(f"translation requires gcd(h, m) = 1, got h={self.h}")
            return
        if fam in ("segre", "glynni", "glynnii", "cherowitzo", "payne"):
            if m % 2 == 0:
                raise FieldError(f"{fam} requires odd m, got m={m}")
            if fam != "glynni" and self.a is None:
                raise FieldError(f"{fam} requires parameter a")
            return
        if fam == "subiaco":
            a = self.a
            if not a:
                raise FieldError("subiaco requires a != 0")
            if ctx.abs_trace(ctx.inv(a)) != 1:
                raise FieldError(f"subiaco requires Tr(1/a) = 1; fails for a={a}")
            if m % 4 == 2 and ctx.pow_int(a, 4) == a:
                raise FieldError(f"subiaco at m = 2 mod 4 requires a outside GF(4)")
            return
        if fam == "adelaide":
            if m % 2:
                raise FieldError(f"adelaide requires even m, got m={m}")
            if self.sign not in (1, -1):
                raise FieldError("adelaide sign must be +1 or -1")
            ext = canonical_quad_ext(ctx)
            b = self.b
            if b is None or not 0 <= b < ext.q:
                raise FieldError("adelaide requires b in the quadratic extension")
            if b == 1 or ext.pow_int(b, ctx.q + 1) != 1:
                raise FieldError(
                    f"adelaide requires b^(q+1) = 1 and b != 1; fails for b={b}")
            return

    def id_string(self) -> str:
        fam = self.family
        if fam == "translation":
            return f"translation:h={self.h}"
        if fam == "glynni":
            return "glynni"
        if fam == "adelaide":
            return f"adelaide:b={self.b},sign={'+' if self.sign > 0 else '-'}"
        return f"{fam}:a={self.a}"


def _sqrt(ctx: FieldCtx, a: int) -> int:
    # characteristic-2 square root: inverse of Frobenius
    return ctx.pow_int(a, 2 ** (ctx.n - 1)) if a else 0


def instantiate(spec: FamilySpec, ctx: FieldCtx | None = None):
    """Bind a family to GF(2^m): TermPoly where a closed form exists, else PolyFn."""
    if ctx is None:
        ctx = field_gf2m(spec.m)
    spec.validate(ctx)
    fam, m, a = spec.family, spec.m, spec.a
    q = ctx.q
    if fam == "translation":
        return monomial(ctx, 2 ** spec.h)
    if fam == "segre":
        terms = [(6, 1)]
        if a:
            terms += [(4, a), (2, ctx.mul(a, a))]
        return TermPoly(ctx, terms)
    if fam == "glynni":
        return monomial(ctx, 3 * 2 ** ((m + 1) // 2) + 4)
    if fam == "glynnii":
        e1 = 2 ** ((m + 1) // 2)
        e2 = 2 ** ((3 * m + 1) // 4) if m % 4 == 1 else 2 ** ((m + 1) // 4)
        terms = [(e1 + e2, 1)]
        if a:
            terms += [(e1, a), (e2, ctx.pow_int(a, e2))]
        return TermPoly(ctx, terms)
    if fam == "cherowitzo":
        e = 2 ** ((m + 1) // 2)
        terms = [(e, 1)]
        if a:
            terms += [(e + 2, a), (3 * e + 4, ctx.pow_int(a, e + 2))]
        return TermPoly(ctx, terms)
    if fam == "payne":
        terms = [(FracExp(5, 6), 1)]
        if a:
            terms += [(FracExp(3, 6), a), (FracExp(1, 6), ctx.mul(a, a))]
        return TermPoly(ctx, terms)
    if fam == "subiaco":
        a2 = ctx.mul(a, a)
        c2 = ctx.mul(a2, ctx.add(ctx.add(1, a), a2))   # a^2 (1 + a + a^2)
        half = 2 ** (m - 1)

        def sub_eval(x, ctx=ctx, a2=a2, c2=c2, half=half, q=q):
            x2 = ctx.mul(x, x)
            x3 = ctx.mul(x2, x)
            x4 = ctx.mul(x2, x2)
            num = ctx.add(ctx.mul(a2, ctx.add(x4, x)), ctx.mul(c2, ctx.add(x3, x2)))
            den = ctx.add(ctx.add(x4, ctx.mul(a2, x2)), 1)
            return ctx.add(ctx.mul(num, ctx.pow(den, q - 2)), ctx.pow(x, half))

        return PolyFn(ctx, sub_eval, name=spec.id_string())
    if fam == "adelaide":
        ext = canonical_quad_ext(ctx)
        b = spec.b
        ell = spec.sign * (q - 1) // 3
        tb = ext.trace_to_base(b)
        tb_inv = ctx.inv(tb)               # b + b^q != 0 whenever b != 1
        tbl = ext.trace_to_base(ext.pow_int(b, ell))
        bq = ext.pow_int(b, q)
        half = 2 ** (m - 1)

        def ade_eval(x, ctx=ctx, ext=ext, b=b, bq=bq, tb=tb, tb_inv=tb_inv,
                     tbl=tbl, ell=ell, half=half, q=q):
            xh = ctx.pow_int(x, half)
            lin = ctx.mul(ctx.mul(tb_inv, tbl), ctx.add(x, 1))
            w = ext.add(ext.mul(b, ext.embed(x)), bq)
            num = ext.trace_to_base(ext.pow_int(w, ell))
            den = ctx.add(ctx.add(x, ctx.mul(tb, xh)), 1)
            mid = ctx.mul(ctx.mul(tb_inv, num), ctx.pow(den, q - ell))
            return ctx.add(ctx.add(lin, mid), xh)

        return PolyFn(ctx, ade_eval, name=spec.id_string())
    raise FieldError(f"unknown family {fam!r}")  # pragma: no cover


def catalog_specs(m: int, families=None) -> list[FamilySpec]:
    """Every valid FamilySpec the theorems claim at extension degree m."""
    ctx = field_gf2m(m)
    out = []
    for fam in (families or FAMILY_TAGS):
        if fam == "translation":
            out += [FamilySpec(fam, m, h=h) for h in range(1, m)
                    if math.gcd(h, m) == 1]
        elif fam in ("segre", "glynnii", "cherowitzo", "payne"):
            if m % 2:
                out += [FamilySpec(fam, m, a=a) for a in range(ctx.q)]
        elif fam == "glynni":
            if m % 2:
                out.append(FamilySpec(fam, m))
        elif fam == "subiaco":
            if m >= 3:
                for a in range(1, ctx.q):
                    if ctx.abs_trace(ctx.inv(a)) != 1:
                        continue
                    if m % 4 == 2 and ctx.pow_int(a, 4) == a:
                        continue
                    out.append(FamilySpec(fam, m, a=a))
        elif fam == "adelaide":
            if m % 2 == 0 and m >= 4:
                ext = canonical_quad_ext(ctx)
                good = [b for b in range(2, ext.q)
                        if ext.pow_int(b, ctx.q + 1) == 1]
                for sign in (1, -1):
                    out += [FamilySpec(fam, m, b=b, sign=sign) for b in good]
    return out


def catalog_members(m: int, families=None):
    """(spec, bound polynomial) pairs for the whole catalog at degree m."""
    return [(s, instantiate(s)) for s in catalog_specs(m, families)]


# ---------------------------------------------------------------------------
# Hyperoval-preserving transforms.
# ---------------------------------------------------------------------------

TRANSFORM_KINDS = ("inverse", "conjugate", "bar", "translate")


def transform(f, kind: str, j: int | None = None):
    """inverse | conjugate(j) | bar | translate of a permutation of GF(2^m)."""
    ctx = f.ctx
    q = ctx.q
    if kind == "inverse":
        return compositional_inverse(f)
    if kind == "conjugate":
        m = ctx.n
        if j is None or not 1 <= j <= m - 1:
            raise FieldError(f"conjugate needs 1 <= j <= {m - 1}")
        lo, hi = 2 ** j, 2 ** (m - j)
        return PolyFn(ctx,
                      lambda x: ctx.pow_int(f.eval_enc(ctx.pow_int(x, lo)), hi),
                      name=f"conjugate{j}")
    if kind == "bar":
        return PolyFn(ctx, lambda x: ctx.mul(x, f.eval_enc(ctx.pow(x, q - 2))),
                      name="bar")
    if kind == "translate":
        f1 = f.eval_enc(1)
        return PolyFn(ctx, lambda x: ctx.add(f.eval_enc(ctx.add(x, 1)), f1),
                      name="translate")
    raise FieldError(f"unknown transform {kind!r}")


# ---------------------------------------------------------------------------
# o-monomials.
# ---------------------------------------------------------------------------

def o_monomial_test(k: int, ctx: FieldCtx) -> VerifyReport:
    """Three-part criterion for x^k to be an o-polynomial over GF(2^m).

    (a) x^k permutes: gcd(k, q-1) = 1.
    (b) the zero-shift map x^(k-1) permutes: gcd(k-1, q-1) = 1.
    (c) the unit-shift map ((x+1)^k + 1) x^(q-2) permutes; by homogeneity this
        covers every nonzero shift.
    """
    if ctx.p != 2:
        raise FieldError("o-monomials live over characteristic 2 only")
    if not 1 <= k < ctx.q:
        raise FieldError(f"exponent must satisfy 1 <= k < q, got {k}")
    t0 = time.perf_counter()
    q = ctx.q
    failed = []
    if math.gcd(k, q - 1) != 1:
        failed.append("gcd(k, q-1)")
    if math.gcd(k - 1, q - 1) != 1:
        failed.append("gcd(k-1, q-1)")
    shifted = PolyFn(ctx, lambda x: ctx.mul(
        ctx.add(ctx.pow(ctx.add(x, 1), k), 1), ctx.pow(x, q - 2)))
    pp = is_permutation(shifted)
    if not pp.verdict:
        failed.append("((x+1)^k + 1) x^(q-2) permutation")
    ms = int((time.perf_counter() - t0) * 1000)
    if not failed:
        return VerifyReport(True, None, q, ms)
    return VerifyReport(False, {"kind": "o_monomial_criteria", "failed": failed},
                        q, ms)


def o_monomial_orbit(k: int, m: int) -> set[int]:
    """The five exponent transforms of an o-monomial exponent, resolved mod 2^m - 1."""
    n = 2 ** m - 1
    if math.gcd(k, n) != 1:
        raise FieldError(f"1/k needs gcd(k, 2^{m}-1) = 1")
    if math.gcd(k - 1, n) != 1:
        raise FieldError(f"the k-1 fractions need gcd(k-1, 2^{m}-1) = 1")
    kinv = pow(k, -1, n)
    k1inv = pow((k - 1) % n, -1, n)
    orbit = {
        kinv % n,                      # 1/k
        (1 - k) % n,                   # 1 - k
        pow((1 - k) % n, -1, n),       # 1/(1-k)
        (k * k1inv) % n,               # k/(k-1)
        ((k - 1) * kinv) % n,          # (k-1)/k
    }
    return {e if e else n for e in orbit}


# ---------------------------------------------------------------------------
# Closed-form inverses stated alongside the families.
# ---------------------------------------------------------------------------

STATED_INVERSE_FAMILIES = ("translation", "segre", "payne_1", "bar_segre_1",
                           "cherowitzo")


def _dickson_inverse_of_5(ctx: FieldCtx) -> TermPoly:
    # order (3*2^(2m) - 2)/5: the inverse of 5 modulo 2^(2m) - 1
    m = ctx.n
    idx = (3 * 2 ** (2 * m) - 2) // 5
    return dickson(DicksonSpec(idx, 1), ctx)


def stated_inverse(family: str, ctx: FieldCtx, a: int = 0, h: int = 1) -> PolyFn:
    """Evaluator of a published closed-form compositional inverse.

    Agreement with compositional_inverse is a verified property, never an
    assumption.
    """
    m = ctx.n
    q = ctx.q
    if family == "translation":
        if math.gcd(h, m) != 1:
            raise FieldError("translation requires gcd(h, m) = 1")
        e = 2 ** (m - h)
        return PolyFn(ctx, lambda x: ctx.pow_int(x, e),
                      name=f"translation_inverse:h={h}")
    if family == "segre":
        # (x + a^3)^(1/6) + sqrt(a); the source states sqrt(a)^3 for the inner
        # constant but expanding (x + sqrt(a))^6 gives constant a^3, and only
        # a^3 matches the brute-force inverse
        e6 = FracExp(1, 6).resolve(q)
        a3 = ctx.pow_int(a, 3) if a else 0
        sa = _sqrt(ctx, a)
        return PolyFn(ctx, lambda x: ctx.add(ctx.pow(ctx.add(x, a3), e6), sa),
                      name=f"segre_inverse:a={a}")
    if family == "payne_1":
        d = _dickson_inverse_of_5(ctx)
        return PolyFn(ctx, lambda x: ctx.pow(d.eval_enc(x), 6),
                      name="payne1_inverse")
    if family == "bar_segre_1":
        d = _dickson_inverse_of_5(ctx)
        return PolyFn(ctx, lambda x: ctx.pow(d.eval_enc(x), q - 2),
                      name="bar_segre1_inverse")
    if family == "cherowitzo":
        e = 2 ** ((m + 1) // 2)
        ae = ctx.pow_int(a, e) if a else 0
        outer = e // 2 - 1              # 2^(e-1) - 1 with e = (m+1)/2 exponent

        def ch_inv(x, ctx=ctx, a=a, ae=ae, e=e, outer=outer):
            inner = ctx.add(ctx.add(ctx.mul(a, ctx.pow_int(x, e + 1)),
                                    ctx.mul(ae, ctx.pow_int(x, 3))), x)
            return ctx.mul(x, ctx.pow(inner, outer))

        return PolyFn(ctx, ch_inv, name=f"cherowitzo_inverse:a={a}")
    raise FieldError(f"no stated inverse for {family!r}")


# ---------------------------------------------------------------------------
# Family id strings.
# ---------------------------------------------------------------------------

_ALIASES = {"glynn_i": "glynni", "glynn_ii": "glynnii", "trans": "translation"}


def parse_family_id(text: str, m: int) -> FamilySpec:
    s = "".join(text.split())
    tag, _, rest = s.partition(":")
    tag = _ALIASES.get(tag, tag)
    if tag not in FAMILY_TAGS:
        raise SpecParseError(f"unknown family tag {tag!r} in {text!r}")
    kv = {}
    if rest:
        for piece in rest.split(","):
            k, eq, v = piece.partition("=")
            if not eq:
                raise SpecParseError(f"expected key=value, got {piece!r} in {text!r}")
            kv[k] = v
    try:
        h = int(kv.pop("h")) if "h" in kv else None
        a = int(kv.pop("a")) if "a" in kv else None
        b = int(kv.pop("b")) if "b" in kv else None
        sign = kv.pop("sign", "+")
    except ValueError as exc:
        raise SpecParseError(f"bad parameter in {text!r}: {exc}") from None
    if kv:
        raise SpecParseError(f"unknown parameters {sorted(kv)} in {text!r}")
    if sign not in ("+", "-"):
        raise SpecParseError(f"sign must be + or -, got {sign!r}")
    if tag == "translation" and h is None:
        raise SpecParseError(f"translation needs h= in {text!r}")
    if tag in ("segre", "glynnii", "cherowitzo", "payne") and a is None:
        a = 0
    if tag == "subiaco" and a is None:
        raise SpecParseError(f"subiaco needs a= in {text!r}")
    if tag == "adelaide" and b is None:
        raise SpecParseError(f"adelaide needs b= in {text!r}")
    return FamilySpec(tag, m, h=h, a=a, b=b, sign=1 if sign == "+" else -1)
