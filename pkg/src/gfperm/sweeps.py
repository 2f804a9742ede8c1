"""Named verification sweeps: reproducible batch runs with one row per case.

Every suite compares a predicted verdict (a stated closed-form condition, or
plain True for sufficiency claims) against an exhaustive brute-force verdict
and counts mismatches.  Suites are deterministic under a fixed seed; rows are
emitted sorted by case id.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .backend import kernels
from .constructions import (QuadFrame, construct_F, construct_F1,
                            construct_F2, construct_F3, construct_G,
                            cubic_frame, general_lift, general_lift_predicted,
                            quad_frame, random_general_frame,
                            random_perm_table, t71_predicted, t72_predicted,
                            t73_predicted, t74_predicted, tower_iterate)
from .field import build_field, canonical_quad_ext, extend_cubic
from .opoly import (FamilySpec, catalog_members, field_gf2m, instantiate,
                    o_monomial_orbit, o_monomial_test, stated_inverse,
                    transform)
from .poly import (DicksonSpec, TermPoly, dickson, from_table, identity,
                   monomial)
from .verify import (hyperoval_check, is_opolynomial, is_permutation,
                     is_permutation_sorted)


@dataclass
class SweepConfig:
    seed: int = 1
    jobs: int = 1
    cap_opoly: int = 1 << 12
    cap_hyper: int = 1 << 7


@dataclass
class SweepCase:
    suite: str
    case_id: str
    field: str
    params: str
    predicted: bool | None
    verified: bool | None
    mismatch: bool
    elapsed_ms: int = 0


@dataclass
class SweepResult:
    name: str
    cases: list[SweepCase]
    findings: list[str] = dc_field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def mismatches(self) -> int:
        return sum(1 for c in self.cases if c.mismatch)

    def sorted_cases(self) -> list[SweepCase]:
        return sorted(self.cases, key=lambda c: c.case_id)


def _rng(cfg: SweepConfig, name: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{name}")


def _map_cases(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _case(suite, cid, fieldspec, params, predicted, verified):
    mismatch = (predicted is not None and verified is not None
                and predicted != verified)
    return SweepCase(suite, cid, fieldspec, params, predicted, verified, mismatch)


# ---------------------------------------------------------------------------
# Catalog suites.
# ---------------------------------------------------------------------------

def suite_opoly_all(m: int, cfg: SweepConfig) -> SweepResult:
    name = f"opoly-all-m{m}"
    members = catalog_members(m)

    def run(item):
        spec, f = item
        rep = is_opolynomial(f, cap=cfg.cap_opoly)
        return _case(name, spec.id_string(), f"2^{m}", spec.id_string(),
                     True, rep.verdict)

    return SweepResult(name, _map_cases(run, members, cfg.jobs))


def suite_opoly_transforms(m: int, cfg: SweepConfig) -> SweepResult:
    name = f"opoly-transforms-m{m}"
    cases = []
    for spec, f in catalog_members(m):
        if not is_opolynomial(f, cap=cfg.cap_opoly).verdict:  # pragma: no cover
            continue
        variants = [("inverse", transform(f, "inverse")),
                    ("bar", transform(f, "bar")),
                    ("translate", transform(f, "translate"))]
        variants += [(f"conjugate{j}", transform(f, "conjugate", j))
                     for j in range(1, m)]
        for kind, g in variants:
            rep = is_opolynomial(g, cap=cfg.cap_opoly)
            cases.append(_case(name, f"{spec.id_string()}|{kind}", f"2^{m}",
                               kind, True, rep.verdict))
    return SweepResult(name, cases)


def suite_stated_inverses(m: int, cfg: SweepConfig) -> SweepResult:
    name = f"stated-inverses-m{m}"
    ctx = field_gf2m(m)
    cases = []

    def agree(f, g) -> bool:
        return all(f.eval_enc(x) == g.eval_enc(x) for x in range(ctx.q))

    for h in range(1, m):
        if math.gcd(h, m) != 1:
            continue
        f = instantiate(FamilySpec("translation", m, h=h))
        got = transform(f, "inverse")
        cases.append(_case(name, f"translation:h={h}", f"2^{m}", f"h={h}",
                           True, agree(got, stated_inverse("translation", ctx, h=h))))
    for a in range(ctx.q):
        f = instantiate(FamilySpec("segre", m, a=a))
        got = transform(f, "inverse")
        cases.append(_case(name, f"segre:a={a}", f"2^{m}", f"a={a}",
                           True, agree(got, stated_inverse("segre", ctx, a=a))))
    payne1 = instantiate(FamilySpec("payne", m, a=1))
    cases.append(_case(name, "payne:a=1", f"2^{m}", "a=1", True,
                       agree(transform(payne1, "inverse"),
                             stated_inverse("payne_1", ctx))))
    bar_segre1 = transform(instantiate(FamilySpec("segre", m, a=1)), "bar")
    cases.append(_case(name, "bar-segre:a=1", f"2^{m}", "a=1", True,
                       agree(transform(bar_segre1, "inverse"),
                             stated_inverse("bar_segre_1", ctx))))
    for a in range(1, ctx.q):
        f = instantiate(FamilySpec("cherowitzo", m, a=a))
        got = transform(f, "inverse")
        cases.append(_case(name, f"cherowitzo:a={a}", f"2^{m}", f"a={a}",
                           True, agree(got, stated_inverse("cherowitzo", ctx, a=a))))
    return SweepResult(name, cases)


def suite_o_monomial(m: int, cfg: SweepConfig) -> SweepResult:
    name = f"o-monomial-m{m}"
    ctx = field_gf2m(m)

    def run(k):
        crit = o_monomial_test(k, ctx).verdict
        oracle = is_opolynomial(monomial(ctx, k), cap=cfg.cap_opoly).verdict
        return _case(name, f"k={k:04d}", f"2^{m}", f"k={k}", crit, oracle)

    return SweepResult(name, _map_cases(run, range(1, ctx.q), cfg.jobs))


def suite_o_monomial_orbit(m: int, cfg: SweepConfig) -> SweepResult:
    name = f"o-monomial-orbit-m{m}"
    ctx = field_gf2m(m)
    cases = []
    for k in range(2, ctx.q - 1):
        if not o_monomial_test(k, ctx).verdict:
            continue
        orbit = o_monomial_orbit(k, m)
        members_pass = all(o_monomial_test(e, ctx).verdict for e in orbit)
        cls = orbit | {k}
        closed = all(o_monomial_orbit(e, m) | {e} == cls for e in cls)
        cases.append(_case(name, f"k={k:04d}", f"2^{m}",
                           f"k={k},orbit={sorted(orbit)}", True,
                           members_pass and closed))
    return SweepResult(name, cases)


# ---------------------------------------------------------------------------
# General-lift iff suites.
# ---------------------------------------------------------------------------

def _function_family(ctx, rng: random.Random):
    fam = [("id", identity(ctx)),
           ("frob", monomial(ctx, ctx.p)),
           ("cube", monomial(ctx, 3)),
           ("const1", TermPoly(ctx, [(0, 1)]))]
    fam += [(f"rp{i}", random_perm_table(ctx, rng)) for i in range(5)]
    return fam


def suite_t21_iff(q: int, m: int, n_frames: int, cfg: SweepConfig) -> SweepResult:
    name = f"t21-iff-m{m}-q{q}" if m == 3 else f"t21-iff-q{q}"
    base = _base_field(q)
    ext = canonical_quad_ext(base) if m == 2 else extend_cubic(base)
    ext.ensure_tables()
    rng = _rng(cfg, name)
    frames = [random_general_frame(ext, rng) for _ in range(n_frames)]
    fam = _function_family(base, rng)
    items = []
    for fi, frame in enumerate(frames):
        if m == 2:
            items += [(fi, frame, (fa, fb)) for fa in fam for fb in fam]
        else:
            items += [(fi, frame, (fa, fb, fc))
                      for fa in fam for fb in fam for fc in fam]

    def run(item):
        fi, frame, picks = item
        fs = [f for _, f in picks]
        labels = "+".join(lbl for lbl, _ in picks)
        lifted = general_lift(frame, fs)
        pred = general_lift_predicted(fs)
        verified = is_permutation(lifted).verdict
        return _case(name, f"frame{fi:02d}|{labels}", f"{q}^{m}", labels,
                     pred, verified)

    return SweepResult(name, _map_cases(run, items, cfg.jobs))


def _base_field(q: int):
    for p in (2, 3, 5, 7, 11, 13):
        n = 0
        qq = q
        while qq % p == 0:
            qq //= p
            n += 1
        if qq == 1 and n:
            return build_field(p, n)
    raise ValueError(f"unsupported field order {q}")


# ---------------------------------------------------------------------------
# Lifting construction suites.
# ---------------------------------------------------------------------------

def suite_construct_f(m: int, cfg: SweepConfig) -> SweepResult:
    name = f"construct-f-m{m}"
    frame = quad_frame(base=field_gf2m(m))

    def run(item):
        spec, f = item
        lifted = construct_F(frame, f)
        return _case(name, spec.id_string(), f"2^{m}:2", spec.id_string(),
                     True, is_permutation(lifted).verdict)

    return SweepResult(name, _map_cases(run, catalog_members(m), cfg.jobs))


def suite_f123_iff(q: int, cfg: SweepConfig) -> SweepResult:
    name = f"f123-iff-q{q}"
    base = _base_field(q)
    frame = quad_frame(base=base)
    rng = _rng(cfg, name)
    fam = _function_family(base, rng)
    builders = {"F1": construct_F1, "F2": construct_F2, "F3": construct_F3}
    items = [(kind, la, fa, lb, fb) for kind in builders
             for la, fa in fam for lb, fb in fam]

    def run(item):
        kind, la, fa, lb, fb = item
        lifted = builders[kind](frame, fa, fb)
        pred = (is_permutation(fa).verdict and is_permutation(fb).verdict)
        verified = is_permutation(lifted).verdict
        return _case(name, f"{kind}|{la}+{lb}", f"{q}:2", f"{la}+{lb}",
                     pred, verified)

    return SweepResult(name, _map_cases(run, items, cfg.jobs))


def suite_beta_independence(q: int, cfg: SweepConfig) -> SweepResult:
    """Lift verdicts must not depend on the choice of beta outside the base."""
    name = f"beta-indep-q{q}"
    base = _base_field(q)
    fr_root = quad_frame(base=base, beta="root")
    fr_gen = quad_frame(base=base, beta="gen")
    rng = _rng(cfg, name)
    fam = _function_family(base, rng)
    builders = {"F1": construct_F1, "F2": construct_F2, "F3": construct_F3}
    cases = []
    for kind, build in builders.items():
        for la, fa in fam:
            for lb, fb in fam:
                v_root = is_permutation(build(fr_root, fa, fb)).verdict
                v_gen = is_permutation(build(fr_gen, fa, fb)).verdict
                cases.append(_case(name, f"{kind}|{la}+{lb}", f"{q}:2",
                                   f"{la}+{lb}", v_root, v_gen))
    return SweepResult(name, cases)


def suite_g_sufficiency(q: int, cfg: SweepConfig) -> SweepResult:
    name = f"g-suff-q{q}"
    base = _base_field(q)
    frame = quad_frame(base=base)
    rng = _rng(cfg, name)
    cases = []
    for i in range(10):
        f = random_perm_table(base, rng)
        lifted = construct_G(frame, f)
        cases.append(_case(name, f"rp{i}", f"{q}:2", f"seeded perm {i}",
                           True, is_permutation(lifted).verdict))
    return SweepResult(name, cases)


def suite_f1_monomials(q: int, cfg: SweepConfig) -> SweepResult:
    """eta x^u + beta gamma y^v lifts: permutation iff gcd(uv, q-1) = 1."""
    name = f"f1-monomials-q{q}"
    base = _base_field(q)
    frame = quad_frame(base=base)
    rng = _rng(cfg, name)
    cases = []
    for u in range(1, q):
        for v in range(1, q):
            eta, gamma = 1, 1
            if rng.random() < 0.2:
                eta = rng.randrange(1, q)
                gamma = rng.randrange(1, q)
            lifted = construct_F1(frame, monomial(base, u, eta),
                                  monomial(base, v, gamma))
            pred = math.gcd(u * v, q - 1) == 1
            verified = is_permutation(lifted).verdict
            cases.append(_case(name, f"u={u:02d},v={v:02d}", f"{q}:2",
                               f"u={u},v={v},eta={eta},gamma={gamma}",
                               pred, verified))
    return SweepResult(name, cases)


def suite_dickson(q: int, cfg: SweepConfig) -> SweepResult:
    """D_h(x, a), a != 0: permutation iff gcd(h, q^2 - 1) = 1."""
    name = f"dickson-q{q}"
    base = _base_field(q)
    rng = _rng(cfg, name)
    params = [1] + [rng.randrange(1, q) for _ in range(2)]
    cases = []
    for h in range(1, 51):
        pred = math.gcd(h, q * q - 1) == 1
        for a in params:
            f = dickson(DicksonSpec(h, a), base)
            verified = is_permutation(f).verdict
            cases.append(_case(name, f"h={h:02d},a={a}", str(q),
                               f"h={h},a={a}", pred, verified))
    return SweepResult(name, cases)


def suite_tower(cfg: SweepConfig) -> SweepResult:
    name = "tower-f1-depth2"
    base = field_gf2m(3)
    t0 = time.perf_counter()
    levels = tower_iterate(monomial(base, 3), 2, "F1")
    rep = is_permutation(levels[-1])
    ms = int((time.perf_counter() - t0) * 1000)   # build + full enumeration
    case = _case(name, "x3-depth2", "2^3:2:2", "scheme=F1", True, rep.verdict)
    case.elapsed_ms = ms
    return SweepResult(name, [case])


# ---------------------------------------------------------------------------
# Linear-plus-power sweeps (kernel-backed exhaustive parameter scans).
# ---------------------------------------------------------------------------

def _add_table(ctx) -> np.ndarray:
    z = np.arange(ctx.q, dtype=np.int64)
    return ctx.add_vec(z[:, None], z[None, :])


def _quad_sweep_tables(frame: QuadFrame):
    ext = frame.ext
    expt, logt = ext.exp_log_np()
    zq = ext.pow_table(frame.base.q).copy()
    addt = _add_table(ext)
    return expt, logt, zq, addt


def suite_t71(q: int, cfg: SweepConfig) -> SweepResult:
    name = f"t71-q{q}"
    base = _base_field(q)
    frame = quad_frame(base=base)
    ext = frame.ext
    expt, logt, zq, addt = _quad_sweep_tables(frame)
    z = np.arange(ext.q, dtype=np.int64)
    S = addt[z, zq]
    zq2 = np.zeros(ext.q, dtype=np.int64)
    elems = np.arange(q, dtype=np.int64)
    uext = elems.copy()                      # base elements embed as themselves
    tlist = np.arange(1, 9, dtype=np.int64)
    verdicts = kernels().linear_power_sweep(
        S, zq, zq2, elems, elems, np.zeros(1, dtype=np.int64), uext, tlist,
        expt, logt, addt)
    cases = []
    idx = 0
    for u in range(q):
        for t in range(1, 9):
            for a in range(q):
                for b in range(q):
                    pred = t71_predicted(frame, a, b, t)
                    cases.append(_case(name, f"u={u},t={t},a={a},b={b}",
                                       f"{q}:2", f"a={a},b={b},u={u},t={t}",
                                       pred, bool(verdicts[idx])))
                    idx += 1
    return SweepResult(name, cases)


def suite_t72(q: int, cfg: SweepConfig) -> SweepResult:
    name = f"t72-q{q}"
    base = _base_field(q)
    frame = quad_frame(base=base)
    ext = frame.ext
    expt, logt, zq, addt = _quad_sweep_tables(frame)
    z = np.arange(ext.q, dtype=np.int64)
    S = addt[z, ext.neg_vec(zq)]             # z - z^q
    zq2 = np.zeros(ext.q, dtype=np.int64)
    elems = np.arange(q, dtype=np.int64)
    uext = np.array([ext.mul(ext.embed(u), frame.alpha) for u in range(q)],
                    dtype=np.int64)
    tlist = np.arange(1, 9, dtype=np.int64)
    verdicts = kernels().linear_power_sweep(
        S, zq, zq2, elems, elems, np.zeros(1, dtype=np.int64), uext, tlist,
        expt, logt, addt)
    cases = []
    idx = 0
    for u in range(q):
        for t in range(1, 9):
            for a in range(q):
                for b in range(q):
                    pred = t72_predicted(frame, a, b, t)
                    cases.append(_case(name, f"u={u},t={t},a={a},b={b}",
                                       f"{q}:2", f"a={a},b={b},u={u},t={t}",
                                       pred, bool(verdicts[idx])))
                    idx += 1
    return SweepResult(name, cases)


def _cubic_sweep(name, q, cfg, omega_weights: bool):
    base = _base_field(q)
    frame = cubic_frame(base=base)
    ext = frame.ext
    expt, logt = ext.exp_log_np()
    addt = _add_table(ext)
    zq = ext.pow_table(base.q).copy()
    zq2 = ext.pow_table(base.q ** 2).copy()
    z = np.arange(ext.q, dtype=np.int64)
    if omega_weights:
        ew = ext.embed(frame.omega)
        ew2 = ext.embed(frame.omega2)
        S = addt[addt[z, ext.mul_vec(ew, zq)], ext.mul_vec(ew2, zq2)]
        alpha2 = ext.mul(frame.alpha, frame.alpha)
        uext = np.array([ext.mul(ext.embed(u), alpha2) for u in (0, 1)],
                        dtype=np.int64)
        pred_fn = t74_predicted
    else:
        S = addt[addt[z, zq], zq2]
        uext = np.array([0, 1], dtype=np.int64)
        pred_fn = t73_predicted
    elems = np.arange(q, dtype=np.int64)
    tlist = np.arange(1, 9, dtype=np.int64)
    verdicts = kernels().linear_power_sweep(
        S, zq, zq2, elems, elems, elems, uext, tlist, expt, logt, addt)
    cases = []
    idx = 0
    for u in (0, 1):
        for t in range(1, 9):
            for a in range(q):
                for b in range(q):
                    for c in range(q):
                        pred = pred_fn(frame, a, b, c, t)
                        cases.append(_case(
                            name, f"u={u},t={t},a={a},b={b},c={c}", f"{q}:3",
                            f"a={a},b={b},c={c},u={u},t={t}",
                            pred, bool(verdicts[idx])))
                        idx += 1
    return SweepResult(name, cases)


def suite_t73(q: int, cfg: SweepConfig) -> SweepResult:
    return _cubic_sweep(f"t73-q{q}", q, cfg, omega_weights=False)


def suite_t74(q: int, cfg: SweepConfig) -> SweepResult:
    return _cubic_sweep(f"t74-q{q}", q, cfg, omega_weights=True)


# ---------------------------------------------------------------------------
# Oracle cross-validation suites.
# ---------------------------------------------------------------------------

def suite_oracle_cross(m: int, cfg: SweepConfig) -> SweepResult:
    """o-polynomial shift oracle vs collinearity oracle on normalized members."""
    from .poly import normalize_opoly
    name = f"oracle-cross-m{m}"

    def run(item):
        spec, f = item
        o_verdict = is_opolynomial(f, cap=cfg.cap_opoly).verdict
        h_verdict = hyperoval_check(normalize_opoly(f), cap=cfg.cap_hyper).verdict
        return _case(name, spec.id_string(), f"2^{m}", spec.id_string(),
                     o_verdict, h_verdict)

    return SweepResult(name, _map_cases(run, catalog_members(m), cfg.jobs))


def suite_perm_oracles(cfg: SweepConfig) -> SweepResult:
    """Bitmap vs sort permutation oracles on 10^4 seeded random value tables."""
    name = "perm-oracles-gf256"
    ctx = build_field(2, 8)
    gen = np.random.Generator(np.random.PCG64(cfg.seed))
    tables = gen.integers(0, 256, size=(10_000, 256), dtype=np.int64)
    cases = []
    for i in range(tables.shape[0]):
        a = is_permutation(tables[i], ctx)
        b = is_permutation_sorted(tables[i], ctx)
        agree = (a.verdict == b.verdict and a.counterexample == b.counterexample)
        cases.append(_case(name, f"tbl={i:05d}", "2^8", f"table {i}",
                           True, agree))
    return SweepResult(name, cases)


# ---------------------------------------------------------------------------
# Open search: does the o-polynomial lift ever permute without an o-polynomial?
# ---------------------------------------------------------------------------

def _converse_cases(name, ctx, frame, tables, cfg):
    cases = []
    findings = []
    for label, tbl in tables:
        f = from_table(ctx, tbl)
        is_op = is_opolynomial(f, cap=cfg.cap_opoly).verdict
        lifted_pp = is_permutation(construct_F(frame, f)).verdict
        vals = [int(v) for v in tbl]
        cases.append(SweepCase(name, label, ctx.spec_string(),
                               f"f={vals}", is_op, lifted_pp, False))
        if lifted_pp and not is_op:
            findings.append(f"non-o-polynomial {vals} lifts to a permutation")
    return cases, findings


def suite_eq4_converse(q: int, cfg: SweepConfig) -> SweepResult:
    """Search for non-o-polynomials whose lift still permutes (no claim made)."""
    name = f"eq4-converse-q{q}"
    ctx = _base_field(q)
    frame = quad_frame(base=ctx)
    tables = []
    if q == 4:
        for code in range(q ** (q - 1)):
            tbl, c = [0], code
            for _ in range(q - 1):
                tbl.append(c % q)
                c //= q
            tables.append((f"f={code:03d}", np.array(tbl, dtype=np.int64)))
    else:
        rng = _rng(cfg, name)
        for i in range(2000):
            tbl = [0] + [rng.randrange(q) for _ in range(q - 1)]
            tables.append((f"f={i:04d}", np.array(tbl, dtype=np.int64)))
    cases, findings = _converse_cases(name, ctx, frame, tables, cfg)
    return SweepResult(name, cases, findings)


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------

SUITES: dict = {}


def _register():
    for m in (2, 3, 4, 5):
        SUITES[f"opoly-all-m{m}"] = (lambda cfg, m=m: suite_opoly_all(m, cfg))
    for m in (3, 5):
        SUITES[f"opoly-transforms-m{m}"] = (
            lambda cfg, m=m: suite_opoly_transforms(m, cfg))
        SUITES[f"stated-inverses-m{m}"] = (
            lambda cfg, m=m: suite_stated_inverses(m, cfg))
        SUITES[f"o-monomial-orbit-m{m}"] = (
            lambda cfg, m=m: suite_o_monomial_orbit(m, cfg))
        SUITES[f"construct-f-m{m}"] = (
            lambda cfg, m=m: suite_construct_f(m, cfg))
        SUITES[f"oracle-cross-m{m}"] = (
            lambda cfg, m=m: suite_oracle_cross(m, cfg))
    for m in (3, 4, 5):
        SUITES[f"o-monomial-m{m}"] = (lambda cfg, m=m: suite_o_monomial(m, cfg))
    for q in (4, 5, 8, 9):
        SUITES[f"t21-iff-q{q}"] = (
            lambda cfg, q=q: suite_t21_iff(q, 2, 20, cfg))
        SUITES[f"f123-iff-q{q}"] = (lambda cfg, q=q: suite_f123_iff(q, cfg))
    SUITES["t21-iff-m3-q4"] = (lambda cfg: suite_t21_iff(4, 3, 1, cfg))
    for q in (4, 8):
        SUITES[f"beta-indep-q{q}"] = (
            lambda cfg, q=q: suite_beta_independence(q, cfg))
    for q in (4, 8, 16):
        SUITES[f"g-suff-q{q}"] = (lambda cfg, q=q: suite_g_sufficiency(q, cfg))
    for q in (7, 8, 9):
        SUITES[f"f1-monomials-q{q}"] = (
            lambda cfg, q=q: suite_f1_monomials(q, cfg))
    for q in (5, 8, 9, 16):
        SUITES[f"dickson-q{q}"] = (lambda cfg, q=q: suite_dickson(q, cfg))
    SUITES["tower-f1-depth2"] = suite_tower
    for q in (5, 7, 9):
        SUITES[f"t71-q{q}"] = (lambda cfg, q=q: suite_t71(q, cfg))
        SUITES[f"t72-q{q}"] = (lambda cfg, q=q: suite_t72(q, cfg))
    for q in (4, 7):
        SUITES[f"t73-q{q}"] = (lambda cfg, q=q: suite_t73(q, cfg))
        SUITES[f"t74-q{q}"] = (lambda cfg, q=q: suite_t74(q, cfg))
    SUITES["perm-oracles-gf256"] = suite_perm_oracles
    for q in (4, 8):
        SUITES[f"eq4-converse-q{q}"] = (
            lambda cfg, q=q: suite_eq4_converse(q, cfg))


_register()


def run_suite(name: str, cfg: SweepConfig | None = None) -> SweepResult:
    if name not in SUITES:
        raise KeyError(name)
    cfg = cfg or SweepConfig()
    t0 = time.perf_counter()
    result = SUITES[name](cfg)
    result.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return result
