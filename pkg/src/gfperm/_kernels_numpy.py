"""Pure-numpy implementations of the hot verification kernels.

This is the fallback backend (GFPERM_BACKEND=numpy) and the reference
semantics for the numba backend: both must return identical verdicts and
identical deterministic counterexamples.

Conventions shared by both backends:
  * field elements are int64 encodings; expt/logt are exp/log tables built
    from the field's smallest generator (logt[0] = -1 sentinel);
  * a "first collision" is the pair (x1, x2) where x2 is the smallest input
    whose value repeats an earlier one and x1 is the smallest preimage of
    that value;
  * characteristic-2 kernels add encodings with XOR.
"""

import numpy as np

NAME = "numpy"


def _first_collision(values):
    """Deterministic first collision of a value table, or None."""
    order = np.argsort(values, kind="stable")
    sv = values[order]
    eq = sv[1:] == sv[:-1]
    if not eq.any():
        return None
    # within an equal-value run the stable sort keeps inputs ascending, so the
    # candidate pairs are (run start, next); the global first collision is the
    # pair with the smallest second component
    x2_cands = order[1:][eq]
    j = int(np.argmin(x2_cands))
    x2 = int(x2_cands[j])
    v = values[x2]
    x1 = int(np.flatnonzero(values == v)[0])
    return x1, x2


def perm_scan(values):
    """(ok, x1, x2): bitmap-style permutation check with first collision."""
    hit = _first_collision(np.asarray(values, dtype=np.int64))
    if hit is None:
        return 1, -1, -1
    return 0, hit[0], hit[1]


def opoly_scan(fvals, expt, logt, invt):
    """Shift sweep of the o-polynomial property over GF(2^m).

    For each s checks that x -> (f(x+s) + f(s)) * x^(q-2) permutes the field;
    returns (ok, s, x1, x2) with the first failing shift and its first
    collision.  f itself is assumed already checked (value table given).
    """
    q = len(fvals)
    m = q - 1
    x = np.arange(q, dtype=np.int64)
    for s in range(q):
        fs = fvals[x ^ s] ^ fvals[s]
        g = np.zeros(q, dtype=np.int64)
        nz = (fs != 0) & (invt != 0)
        g[nz] = expt[(logt[fs[nz]] + logt[invt[nz]]) % m]
        hit = _first_collision(g)
        if hit is not None:
            return 0, s, hit[0], hit[1]
    return 1, -1, -1, -1


def collinear_scan(px, py, pz, expt, logt):
    """(ok, i, j, k): first collinear triple among projective points, char 2."""
    n = len(px)
    m = len(expt)

    def mul(a, b):
        if a == 0 or b == 0:
            return 0
        return int(expt[(logt[a] + logt[b]) % m])

    def mulv(a, bs):
        out = np.zeros(len(bs), dtype=np.int64)
        if a != 0:
            nz = bs != 0
            out[nz] = expt[(logt[a] + logt[bs[nz]]) % m]
        return out

    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            myz = mul(py[i], pz[j]) ^ mul(py[j], pz[i])
            mxz = mul(px[i], pz[j]) ^ mul(px[j], pz[i])
            mxy = mul(px[i], py[j]) ^ mul(px[j], py[i])
            ks = np.arange(j + 1, n)
            det = mulv(myz, px[ks]) ^ mulv(mxz, py[ks]) ^ mulv(mxy, pz[ks])
            zero = np.flatnonzero(det == 0)
            if len(zero):
                return 0, i, j, int(ks[zero[0]])
    return 1, -1, -1, -1


def _digit_sum_mod(acc, p):
    """Recompose per-digit integer sums into an encoding (digits taken mod p)."""
    out = 0
    shift = 1
    for d in acc:
        out += (int(d) % p) * shift
        shift *= p
    return out


def eval_terms_scan(exps, coefs, expt, logt, p, n, q):
    """Value table of sum(coef * x^exp) over the whole field.

    Exponents are pre-resolved into [1, q-1] (or 0); the x^0 term contributes
    at x = 0 as well (0^0 = 1 convention).
    """
    m = q - 1
    x = np.arange(q, dtype=np.int64)
    if p == 2:
        out = np.zeros(q, dtype=np.int64)
        for e, c in zip(exps, coefs):
            t = np.zeros(q, dtype=np.int64)
            if e == 0:
                t[:] = c
            else:
                t[1:] = expt[(logt[x[1:]] * int(e) + logt[c]) % m]
            out ^= t
        return out
    acc = np.zeros((n, q), dtype=np.int64)
    for e, c in zip(exps, coefs):
        t = np.zeros(q, dtype=np.int64)
        if e == 0:
            t[:] = c
        else:
            t[1:] = expt[(logt[x[1:]] * int(e) + logt[c]) % m]
        for i in range(n):
            acc[i] += t % p
            t //= p
    out = np.zeros(q, dtype=np.int64)
    shift = 1
    for i in range(n):
        out += (acc[i] % p) * shift
        shift *= p
    return out


def interp_scan(values, expt, logt, p, n):
    """Coefficients of the unique degree < q polynomial matching a value table.

    Uses the power-sum identity: c_k = -sum_x f(x) x^(q-1-k) for k >= 1 and
    c_0 = f(0).
    """
    q = len(values)
    m = q - 1
    coeffs = np.zeros(q, dtype=np.int64)
    coeffs[0] = values[0]
    lx = logt[np.arange(1, q, dtype=np.int64)]
    lv = logt[values[1:]]
    nzv = values[1:] != 0
    for k in range(1, q):
        e = m - k
        if e == 0:
            terms = values.astype(np.int64)  # x^0 = 1 everywhere, incl. x = 0
        else:
            terms = np.zeros(q - 1, dtype=np.int64)
            terms[nzv] = expt[(lx[nzv] * e + lv[nzv]) % m]
        if p == 2:
            coeffs[k] = np.bitwise_xor.reduce(terms)
        else:
            c = 0
            shift = 1
            tt = terms
            for _ in range(n):
                c += (p - int((tt % p).sum()) % p) % p * shift
                tt = tt // p
                shift *= p
            coeffs[k] = c
    return coeffs


def linear_power_sweep(S, zq, zq2, aemb, bemb, cemb, uext, tlist, expt, logt, addt):
    """Permutation verdicts for F(z) = a*z + b*z^q + c*z^q2 + (S(z) + u)^t.

    All inputs are extension-field encodings; addition goes through the
    precomputed addt table so any characteristic works.  Returns a uint8
    verdict array in C order over (u, t, a, b, c).
    """
    Q = len(S)
    m = Q - 1
    z = np.arange(Q, dtype=np.int64)
    azq = zq.astype(np.int64)
    azq2 = zq2.astype(np.int64)

    def mulv(coef, vec):
        out = np.zeros(Q, dtype=np.int64)
        if coef != 0:
            nz = vec != 0
            out[nz] = expt[(logt[coef] + logt[vec[nz]]) % m]
        return out

    verdicts = np.zeros(len(uext) * len(tlist) * len(aemb) * len(bemb) * len(cemb),
                        dtype=np.uint8)
    idx = 0
    for u in uext:
        W = addt[S, u]
        for t in tlist:
            P = np.zeros(Q, dtype=np.int64)
            nz = W != 0
            P[nz] = expt[(logt[W[nz]] * int(t)) % m]
            for a in aemb:
                az = mulv(int(a), z)
                for b in bemb:
                    abz = addt[az, mulv(int(b), azq)]
                    for c in cemb:
                        v = addt[addt[abz, mulv(int(c), azq2)], P]
                        counts = np.bincount(v, minlength=Q)
                        verdicts[idx] = 1 if counts.max() == 1 else 0
                        idx += 1
    return verdicts
