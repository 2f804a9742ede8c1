import random

import numpy as np
import pytest

from gfperm.errors import CapError, FieldError, SpecParseError
from gfperm.field import FracExp, build_field
from gfperm.poly import (DicksonSpec, TermPoly, compose, constant, dickson,
                         from_table, identity, interpolate, linearized,
                         monomial, normalize_opoly, parse_poly_spec,
                         _dickson_closed_terms, _dickson_recurrence_terms)
from gfperm.verify import compositional_inverse, is_permutation


def test_eval_basics(gf8):
    assert TermPoly(gf8, []).eval_enc(5) == 0
    ident = identity(gf8)
    for a in range(8):
        assert ident.eval_enc(a) == a


def test_payne_exponent_resolution(gf8):
    # 6^(-1) = 6 mod 7, so 5/6 -> 30 = 2, 3/6 -> 18 = 4, 1/6 -> 6
    f = TermPoly(gf8, [(FracExp(5, 6), 1), (FracExp(3, 6), 1), (FracExp(1, 6), 1)])
    assert [r for r, _ in f.resolved] == [2, 4, 6]


def test_table_matches_eval(gf8, gf9):
    for ctx in (gf8, gf9):
        f = TermPoly(ctx, [(1, 2), (3, 1), (0, 1)])
        t = f.table()
        assert [f.eval_enc(x) for x in range(ctx.q)] == list(t)


def test_dickson_base_cases(gf8):
    assert dickson(DicksonSpec(1, 3), gf8).resolved == ((1, 1),)


def test_dickson_char3_order5():
    gf9 = build_field(3, 2)
    for a in range(1, 9):
        d = dickson(DicksonSpec(5, a), gf9)
        want = {5: 1, 3: a, 1: gf9.neg(gf9.mul(a, a))}
        assert dict(d.resolved) == {e: c for e, c in want.items() if c}


def test_dickson_char2_order5(gf8):
    for a in range(1, 8):
        d = dickson(DicksonSpec(5, a), gf8)
        assert dict(d.resolved) == {5: 1, 3: a, 1: gf8.mul(a, a)}


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2), (5, 1)])
def test_dickson_closed_equals_recurrence(p, n):
    ctx = build_field(p, n)
    rnd = random.Random(4)
    for h in range(1, 51):
        for a in (1, rnd.randrange(ctx.q)):
            spec = DicksonSpec(h, a)
            assert _dickson_closed_terms(spec, ctx) == \
                _dickson_recurrence_terms(spec, ctx)


def test_dickson_functional_equation(gf8):
    # D_h(y + a/y, a) = y^h + (a/y)^h, checked through the extension
    from gfperm.field import extend_quadratic
    ext = extend_quadratic(gf8)
    d = dickson(DicksonSpec(7, 3), gf8)
    for y in range(1, ext.q):
        ay = ext.div(ext.embed(3), y)
        x = ext.add(y, ay)
        if ext.project(x) is None:
            continue
        lhs = d.eval_enc(ext.project(x))
        rhs = ext.add(ext.pow_int(y, 7), ext.pow_int(ay, 7))
        assert ext.embed(lhs) == rhs


def test_compose(gf8):
    f = monomial(gf8, 2)
    g = compose(f, f)
    for x in range(8):
        assert g.eval_enc(x) == gf8.pow_int(x, 4) if x else g.eval_enc(0) == 0
    h = compose(monomial(gf8, 3), identity(gf8))
    assert all(h.eval_enc(x) == gf8.pow_int(x, 3) for x in range(1, 8))


def test_monomial_inverse_composition(gf8):
    # 3 * 5 = 15 = 1 mod 7
    inv = compositional_inverse(monomial(gf8, 3))
    assert dict(inv.resolved) == {5: 1}
    comp = compose(inv, monomial(gf8, 3))
    assert all(comp.eval_enc(x) == x for x in range(8))


def test_interpolate_roundtrip_exhaustive_small(gf4, gf8):
    for ctx in (gf4, gf8):
        rnd = random.Random(7)
        for _ in range(25):
            nterms = rnd.randrange(0, 4)
            exps = rnd.sample(range(ctx.q - 1), nterms)
            terms = [(e, rnd.randrange(1, ctx.q)) for e in exps]
            f = TermPoly(ctx, terms)
            assert interpolate(f) == f
    assert interpolate(from_table(gf8, np.zeros(8, dtype=np.int64))).resolved == ()


def test_interpolate_cap(gf8):
    with pytest.raises(CapError):
        interpolate(identity(gf8), cap=4)


def test_linearized_additive():
    for p, n in [(2, 4), (3, 3)]:
        ctx = build_field(p, n)
        L = linearized(ctx, [(0, 2 % ctx.q), (1, 1)])
        for a in range(ctx.q):
            for b in range(ctx.q):
                assert L.eval_enc(ctx.add(a, b)) == ctx.add(
                    L.eval_enc(a), L.eval_enc(b))
        for c in range(p):
            ce = ctx.mul(c % ctx.q, 1)
            for a in range(ctx.q):
                assert L.eval_enc(ctx.mul(ce, a)) == ctx.mul(ce, L.eval_enc(a))


def test_linearized_kernel_examples(gf4, gf8):
    L = linearized(gf4, [(0, 1), (1, 1)])    # x + x^2
    assert {x for x in range(4) if L.eval_enc(x) == 0} == {0, 1}
    assert not is_permutation(L).verdict
    F = linearized(gf8, [(1, 1)])            # x^2
    assert is_permutation(F).verdict


def test_normalize(gf8):
    gf3 = build_field(3, 1)
    f = TermPoly(gf3, [(1, 2)])
    g = normalize_opoly(f)
    assert dict(g.resolved) == {1: 1}
    h = monomial(gf8, 2)
    assert normalize_opoly(h) is h
    with pytest.raises(FieldError):
        normalize_opoly(TermPoly(gf8, []))


def test_poly_text_roundtrip(gf32):
    f = parse_poly_spec(gf32, " 5/6:1, 3/6:1 ,1/6:1 ")
    assert f.text() == "5/6:1,3/6:1,1/6:1"
    assert [r for r, _ in f.resolved] == [6, 16, 26]


def test_poly_text_rejects_duplicates(gf8):
    with pytest.raises(SpecParseError):
        parse_poly_spec(gf8, "1:1,8:1")      # 8 resolves to 1 mod 7
    with pytest.raises(SpecParseError):
        parse_poly_spec(gf8, "1;1")


def test_termpoly_merges_internally(gf8):
    f = TermPoly(gf8, [(1, 1), (8, 1)])      # like terms cancel in char 2
    assert f.resolved == ()
    g = TermPoly(gf8, [(1, 1), (8, 2)])
    assert dict(g.resolved) == {1: 3}


def test_constant_and_scale(gf8):
    c = constant(gf8, 5)
    assert all(c.eval_enc(x) == 5 for x in range(8))
    assert dict(c.scale(0).resolved) == {}
