import math
import random

import numpy as np
import pytest

from gfperm.errors import CapError, FieldError, NotPermutationError
from gfperm.field import build_field
from gfperm.poly import from_table, identity, monomial
from gfperm.verify import (ProjPoint, compositional_inverse, hyperoval_check,
                           hyperoval_points, is_opolynomial, is_permutation,
                           is_permutation_sorted)


def test_identity_is_permutation(gf8):
    rep = is_permutation(identity(gf8))
    assert rep.verdict and rep.counterexample is None and rep.domain_size == 8


def test_cube_not_permutation_gf4(gf4):
    rep = is_permutation(monomial(gf4, 3))
    assert not rep.verdict
    ce = rep.counterexample
    x1, x2 = ce["x1"], ce["x2"]
    assert x1 != x2
    assert gf4.pow_int(x1, 3) == gf4.pow_int(x2, 3) == ce["value"]


@pytest.mark.parametrize("q_spec", ["7", "2^3", "3^2", "2^4"])
def test_monomial_permutation_criterion(q_spec):
    from gfperm.field import parse_field_spec
    ctx = parse_field_spec(q_spec)
    q = ctx.q
    rnd = random.Random(9)
    for u in range(1, q):
        a = rnd.randrange(1, q)
        rep = is_permutation(monomial(ctx, u, a))
        assert rep.verdict == (math.gcd(u, q - 1) == 1), (q, u)


def test_bitmap_and_sort_oracles_agree():
    ctx = build_field(2, 6)
    gen = np.random.default_rng(13)
    for _ in range(300):
        tbl = gen.integers(0, 64, 64).astype(np.int64)
        a = is_permutation(tbl, ctx)
        b = is_permutation_sorted(tbl, ctx)
        assert a.verdict == b.verdict
        assert a.counterexample == b.counterexample


def test_permutation_cap(gf8):
    with pytest.raises(CapError):
        is_permutation(identity(gf8), cap=4)


def test_opolynomial_examples(gf8, gf32):
    assert is_opolynomial(monomial(gf8, 2)).verdict
    assert is_opolynomial(monomial(gf32, 6)).verdict
    rep = is_opolynomial(monomial(gf8, 3))
    assert not rep.verdict and rep.counterexample["kind"] == "shift"


def test_opolynomial_counterexample_recheck(gf8):
    rep = is_opolynomial(monomial(gf8, 3))
    s, x1, x2 = (rep.counterexample[k] for k in ("s", "x1", "x2"))

    def shifted(x):
        return gf8.mul(gf8.add(gf8.pow_int(gf8.add(x, s), 3),
                               gf8.pow_int(s, 3) if s else 0),
                       gf8.pow(x, 6))

    assert x1 != x2 and shifted(x1) == shifted(x2)


def test_opolynomial_rejects_odd_char(gf9):
    with pytest.raises(FieldError):
        is_opolynomial(identity(gf9))


def test_opolynomial_nonzero_at_zero(gf8):
    f = from_table(gf8, np.array([1, 0, 2, 3, 4, 5, 6, 7]))
    rep = is_opolynomial(f)
    assert not rep.verdict and rep.counterexample["kind"] == "nonzero_at_zero"


def test_opolynomial_implies_permutation_fixing_zero(gf8):
    for e in range(1, 8):
        rep = is_opolynomial(monomial(gf8, e))
        if rep.verdict:
            assert is_permutation(monomial(gf8, e)).verdict
            assert monomial(gf8, e).eval_enc(0) == 0


def test_hyperoval_square_gf4(gf4):
    rep = hyperoval_check(monomial(gf4, 2))
    assert rep.verdict
    assert len(hyperoval_points(monomial(gf4, 2))) == 6


def test_hyperoval_identity_collinear(gf4):
    rep = hyperoval_check(identity(gf4))
    assert not rep.verdict
    pts = rep.counterexample["points"]
    # the reported triple really is collinear: determinant vanishes
    det = 0
    for (i, j, k) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        det = gf4.add(det, gf4.mul(pts[0][i],
                                   gf4.mul(pts[1][j], pts[2][k])))
        det = gf4.add(det, gf4.mul(pts[0][k],
                                   gf4.mul(pts[1][j], pts[2][i])))
    assert det == 0


def test_hyperoval_preconditions(gf4, gf8, gf9):
    with pytest.raises(FieldError):
        hyperoval_check(monomial(gf4, 2, 2))   # f(1) != 1
    with pytest.raises(FieldError):
        hyperoval_check(identity(gf9))
    with pytest.raises(CapError):
        hyperoval_check(monomial(gf8, 2), cap=4)


def test_proj_point_normalization(gf4):
    p = ProjPoint.make(gf4, 2, 3, 1)
    assert p.x == 1
    with pytest.raises(FieldError):
        ProjPoint.make(gf4, 0, 0, 0)


def test_compositional_inverse_translation(gf32):
    for h in (1, 2, 3, 4):
        inv = compositional_inverse(monomial(gf32, 2 ** h))
        assert dict(inv.resolved) == {2 ** (5 - h): 1}


def test_compositional_inverse_involution(gf16, rng):
    tbl = list(range(16))
    rng.shuffle(tbl)
    f = from_table(gf16, np.array(tbl))
    g = compositional_inverse(f)
    h = compositional_inverse(g)
    assert np.array_equal(h.table(), f.table())


def test_compositional_inverse_rejects_non_permutation(gf4):
    with pytest.raises(NotPermutationError) as exc:
        compositional_inverse(monomial(gf4, 3))
    assert exc.value.counterexample["x1"] != exc.value.counterexample["x2"]


def test_report_json_shape(gf8):
    rep = is_permutation(identity(gf8))
    d = rep.to_dict(timings=False)
    assert list(d) == ["verdict", "counterexample", "domain_size", "elapsed_ms"]
    assert d["elapsed_ms"] == 0
