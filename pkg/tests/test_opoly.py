import pytest

from gfperm.errors import FieldError, SpecParseError
from gfperm.field import FracExp
from gfperm.opoly import (FAMILY_TAGS, FamilySpec, catalog_members,
                          catalog_specs, field_gf2m, instantiate,
                          o_monomial_orbit, o_monomial_test, parse_family_id,
                          stated_inverse, transform)
from gfperm.poly import PolyFn, TermPoly, interpolate, monomial
from gfperm.verify import compositional_inverse, is_opolynomial


def test_translation_m3_is_square():
    f = instantiate(FamilySpec("translation", 3, h=1))
    assert dict(f.resolved) == {2: 1}
    assert is_opolynomial(f).verdict


def test_segre_zero_is_the_sixth_power():
    f = instantiate(FamilySpec("segre", 5, a=0))
    assert dict(f.resolved) == {6: 1}
    assert is_opolynomial(f).verdict


def test_payne_m5_exponents():
    f = instantiate(FamilySpec("payne", 5, a=1))
    assert sorted(dict(f.resolved)) == [6, 16, 26]
    assert (2 ** 4 + 2) // 3 == 6 and (5 * 2 ** 4 - 2) // 3 == 26


def test_family_validation_errors():
    ctx = field_gf2m(4)
    with pytest.raises(FieldError):
        FamilySpec("translation", 4, h=2).validate(ctx)
    with pytest.raises(FieldError):
        FamilySpec("segre", 4, a=1).validate(ctx)
    with pytest.raises(FieldError):
        FamilySpec("subiaco", 3, a=0).validate(field_gf2m(3))
    with pytest.raises(FieldError):
        FamilySpec("adelaide", 4, b=1).validate(ctx)
    with pytest.raises(FieldError):
        FamilySpec("adelaide", 5, b=2).validate(field_gf2m(5))


def test_subiaco_trace_condition():
    ctx = field_gf2m(3)
    ok = [s.a for s in catalog_specs(3, families=["subiaco"])]
    for a in ok:
        assert ctx.abs_trace(ctx.inv(a)) == 1
    assert 1 in ok


def test_adelaide_parameter_count():
    specs = catalog_specs(4, families=["adelaide"])
    assert len(specs) == 32   # 16 valid b, both signs
    f = instantiate(specs[0])
    assert is_opolynomial(f).verdict


def test_catalog_small_m_all_valid():
    for m in (2, 3):
        for spec, f in catalog_members(m):
            assert is_opolynomial(f).verdict, spec.id_string()


def test_bar_of_translation(gf32):
    # x * (x^(q-2))^(2^h) = x^(1 - 2^h) = x^(q - 2^h); as a family this is the
    # reversed-translation set (the h <-> m-h relabeling of its usual print)
    for h in (1, 2, 3, 4):
        f = instantiate(FamilySpec("translation", 5, h=h))
        bar = transform(f, "bar")
        want = monomial(gf32, 32 - 2 ** h)
        assert all(bar.eval_enc(x) == want.eval_enc(x) for x in range(32))
        other = monomial(gf32, 32 - 2 ** (5 - h))
        assert any(bar.eval_enc(x) != other.eval_enc(x) for x in range(32))


def test_bar_of_segre_is_reversed_trinomial(gf32):
    q = 32
    for a in range(32):
        f = instantiate(FamilySpec("segre", 5, a=a))
        bar = transform(f, "bar")
        terms = [(q - 6, 1)]
        if a:
            terms += [(q - 4, a), (q - 2, gf32.mul(a, a))]
        want = TermPoly(gf32, terms)
        assert all(bar.eval_enc(x) == want.eval_enc(x) for x in range(32))


def test_translate_is_an_involution(gf8):
    f = instantiate(FamilySpec("payne", 3, a=3))
    g = transform(transform(f, "translate"), "translate")
    assert all(g.eval_enc(x) == f.eval_enc(x) for x in range(8))


def test_conjugate_requires_valid_j(gf8):
    f = monomial(gf8, 2)
    with pytest.raises(FieldError):
        transform(f, "conjugate")
    with pytest.raises(FieldError):
        transform(f, "conjugate", 3)
    g = transform(f, "conjugate", 1)
    assert is_opolynomial(g).verdict


def test_o_monomial_examples():
    assert o_monomial_test(6, field_gf2m(5)).verdict
    for m in (2, 3, 4, 5):
        assert o_monomial_test(2, field_gf2m(m)).verdict
    rep = o_monomial_test(3, field_gf2m(3))
    assert not rep.verdict
    assert "permutation" in " ".join(rep.counterexample["failed"])


def test_o_monomial_orbit_example():
    assert o_monomial_orbit(6, 5) == {6, 26}
    # 1/2 = 2^(m-1)
    for m in (3, 4, 5):
        assert 2 ** (m - 1) in o_monomial_orbit(2, m)
    with pytest.raises(FieldError):
        o_monomial_orbit(7, 3)   # gcd(7, 7) != 1


def test_o_monomial_orbit_closure():
    for m in (3, 5):
        for k in range(2, 2 ** m - 1):
            if not o_monomial_test(k, field_gf2m(m)).verdict:
                continue
            cls = o_monomial_orbit(k, m) | {k}
            for e in cls:
                assert o_monomial_orbit(e, m) | {e} == cls


def test_stated_inverse_payne1_m3(gf8):
    # Dickson order (3*2^6 - 2)/5 = 38; sixth power of it inverts the trinomial
    assert (3 * 2 ** 6 - 2) // 5 == 38
    inv = stated_inverse("payne_1", gf8)
    ref = compositional_inverse(instantiate(FamilySpec("payne", 3, a=1)))
    assert all(inv.eval_enc(x) == ref.eval_enc(x) for x in range(8))


def test_stated_inverse_payne1_m5_composes_to_identity(gf32):
    from gfperm.poly import compose
    inv = stated_inverse("payne_1", gf32)
    comp = compose(inv, instantiate(FamilySpec("payne", 5, a=1), gf32))
    assert all(comp.eval_enc(x) == x for x in range(32))


def test_stated_inverse_cherowitzo1_m5(gf32):
    got = stated_inverse("cherowitzo", gf32, a=1)
    ref = compositional_inverse(instantiate(FamilySpec("cherowitzo", 5, a=1)))
    assert all(got.eval_enc(x) == ref.eval_enc(x) for x in range(32))


def test_segre_inverse_constant_regression(gf8):
    """The stated inverse needs a^3 inside the power; the half-power constant
    printed alongside the family fails already at m = 3, a = 2."""
    a = 2
    seg = instantiate(FamilySpec("segre", 3, a=a))
    ref = compositional_inverse(seg)
    good = stated_inverse("segre", gf8, a=a)
    assert all(good.eval_enc(x) == ref.eval_enc(x) for x in range(8))
    e6 = FracExp(1, 6).resolve(8)
    half = lambda v: gf8.pow_int(v, 4)
    sqrt_a3 = half(gf8.pow_int(a, 3))
    literal = PolyFn(gf8, lambda x: gf8.add(
        gf8.pow(gf8.add(x, sqrt_a3), e6), half(a)))
    assert any(literal.eval_enc(x) != ref.eval_enc(x) for x in range(8))


def test_bar_cherowitzo_closed_form_is_bar_of_inverse(gf8):
    """The reversed-trinomial power form equals bar(inverse), not bar itself."""
    m, q, e = 3, 8, 2 ** 2
    for a in range(1, 8):
        ch = instantiate(FamilySpec("cherowitzo", m, a=a))
        rev = TermPoly(gf8, [(q - e - 2, a), (q - 4, gf8.pow_int(a, e)),
                             (q - 2, 1)])
        closed = PolyFn(gf8, lambda x: gf8.pow(rev.eval_enc(x), e // 2 - 1))
        bar_inv = transform(transform(ch, "inverse"), "bar")
        assert all(closed.eval_enc(x) == bar_inv.eval_enc(x) for x in range(8))
        bar = transform(ch, "bar")
        if a not in (1,):
            assert any(closed.eval_enc(x) != bar.eval_enc(x) for x in range(8))


@pytest.mark.parametrize("m", [3, 5])
def test_cherowitzo_scaling_identity(m):
    ctx = field_gf2m(m)
    e = (m + 1) // 2
    ch1 = instantiate(FamilySpec("cherowitzo", m, a=1))
    for a in range(1, ctx.q):
        cha = instantiate(FamilySpec("cherowitzo", m, a=a))
        s = ctx.inv(ctx.pow_int(a, 2 ** (e - 1)))
        ra = ctx.pow_int(a, 2 ** (m - 1))         # a^(1/2)
        for x in range(ctx.q):
            assert cha.eval_enc(x) == ctx.mul(
                s, ch1.eval_enc(ctx.mul(ra, x)))


@pytest.mark.parametrize("m", [3, 5])
def test_payne_scaling_identity(m):
    ctx = field_gf2m(m)
    p1 = instantiate(FamilySpec("payne", m, a=1))
    for a in range(1, ctx.q):
        pa = instantiate(FamilySpec("payne", m, a=a))
        s = ctx.pow(a, FracExp(5, 2))
        ainv3 = ctx.pow_int(a, -3)
        for x in range(ctx.q):
            assert pa.eval_enc(x) == ctx.mul(s, p1.eval_enc(ctx.mul(ainv3, x)))


@pytest.mark.parametrize("m", [3, 5])
def test_odd_exponent_coefficients_vanish(m, capsys):
    """Interpolated catalog members carry no odd exponent >= 3; whether the
    degree-1 coefficient also vanishes is checked and reported, not asserted."""
    exp1_hits = []
    for spec, f in catalog_members(m):
        poly = interpolate(f) if isinstance(f, PolyFn) else f
        for e, c in poly.resolved:
            if e >= 3 and e % 2 == 1:
                raise AssertionError(
                    f"{spec.id_string()} has odd exponent {e}")
        if any(e == 1 for e, _ in poly.resolved):
            exp1_hits.append(spec.id_string())
    print(f"odd-coefficient claim at m={m}: exponent-1 terms in {exp1_hits!r}"
          if exp1_hits else
          f"odd-coefficient claim at m={m}: holds literally (no odd terms)")


def test_parse_family_ids():
    s = parse_family_id("segre:a=5", 5)
    assert s == FamilySpec("segre", 5, a=5)
    s = parse_family_id("adelaide:b=137,sign=-", 4)
    assert s.b == 137 and s.sign == -1
    s = parse_family_id("glynn_ii:a=0", 5)
    assert s.family == "glynnii"
    assert parse_family_id("translation:h=2", 5).h == 2
    with pytest.raises(SpecParseError):
        parse_family_id("nosuch:a=1", 5)
    with pytest.raises(SpecParseError):
        parse_family_id("segre:z=1", 5)
    with pytest.raises(SpecParseError):
        parse_family_id("adelaide:b=2,sign=?", 4)


def test_id_strings_roundtrip():
    for m in (3, 4):
        for spec in catalog_specs(m):
            assert parse_family_id(spec.id_string(), m) == spec


def test_family_tags_catalog():
    assert len(FAMILY_TAGS) == 8
