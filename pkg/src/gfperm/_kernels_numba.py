"""Numba-jitted implementations of the hot verification kernels.

Mirrors _kernels_numpy exactly: same signatures, same verdicts, same
deterministic counterexamples.  The inner loops here dominate the runtime of
the exhaustive sweeps, which is why they are tight scalar loops over int64
encodings rather than vectorized numpy.
"""

import numpy as np
from numba import njit

NAME = "numba"

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def perm_scan(values):
    q = len(values)
    first = np.full(q, -1, dtype=np.int64)
    for x in range(q):
        v = values[x]
        if first[v] >= 0:
            return 0, first[v], x
        first[v] = x
    return 1, -1, -1


@njit(**_JIT)
def opoly_scan(fvals, expt, logt, invt):
    q = len(fvals)
    m = q - 1
    seen = np.full(q, -1, dtype=np.int64)
    first = np.full(q, -1, dtype=np.int64)
    for s in range(q):
        fs = fvals[s]
        for x in range(q):
            w = fvals[x ^ s] ^ fs
            ix = invt[x]
            if w == 0 or ix == 0:
                g = 0
            else:
                g = expt[(logt[w] + logt[ix]) % m]
            if seen[g] == s:
                return 0, s, first[g], x
            seen[g] = s
            first[g] = x
    return 1, -1, -1, -1


@njit(**_JIT)
def _mul2(a, b, expt, logt, m):
    if a == 0 or b == 0:
        return np.int64(0)
    return expt[(logt[a] + logt[b]) % m]


@njit(**_JIT)
def collinear_scan(px, py, pz, expt, logt):
    n = len(px)
    m = len(expt)
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            myz = _mul2(py[i], pz[j], expt, logt, m) ^ _mul2(py[j], pz[i], expt, logt, m)
            mxz = _mul2(px[i], pz[j], expt, logt, m) ^ _mul2(px[j], pz[i], expt, logt, m)
            mxy = _mul2(px[i], py[j], expt, logt, m) ^ _mul2(px[j], py[i], expt, logt, m)
            for k in range(j + 1, n):
                det = (_mul2(myz, px[k], expt, logt, m)
                       ^ _mul2(mxz, py[k], expt, logt, m)
                       ^ _mul2(mxy, pz[k], expt, logt, m))
                if det == 0:
                    return 0, i, j, k
    return 1, -1, -1, -1


@njit(**_JIT)
def eval_terms_scan(exps, coefs, expt, logt, p, n, q):
    m = q - 1
    nt = len(exps)
    out = np.zeros(q, dtype=np.int64)
    if p == 2:
        for x in range(q):
            acc = np.int64(0)
            for i in range(nt):
                e = exps[i]
                if e == 0:
                    acc ^= coefs[i]
                elif x != 0:
                    acc ^= expt[(logt[x] * e + logt[coefs[i]]) % m]
            out[x] = acc
        return out
    dig = np.zeros(n, dtype=np.int64)
    for x in range(q):
        for i in range(n):
            dig[i] = 0
        for i in range(nt):
            e = exps[i]
            if e == 0:
                t = coefs[i]
            elif x == 0:
                t = np.int64(0)
            else:
                t = expt[(logt[x] * e + logt[coefs[i]]) % m]
            for d in range(n):
                dig[d] += t % p
                t //= p
        v = np.int64(0)
        shift = np.int64(1)
        for d in range(n):
            v += (dig[d] % p) * shift
            shift *= p
        out[x] = v
    return out


@njit(**_JIT)
def interp_scan(values, expt, logt, p, n):
    q = len(values)
    m = q - 1
    coeffs = np.zeros(q, dtype=np.int64)
    coeffs[0] = values[0]
    dig = np.zeros(n, dtype=np.int64)
    for k in range(1, q):
        e = m - k
        if p == 2:
            acc = np.int64(0)
            if e == 0:
                for x in range(q):
                    acc ^= values[x]
            else:
                for x in range(1, q):
                    v = values[x]
                    if v != 0:
                        acc ^= expt[(logt[x] * e + logt[v]) % m]
            coeffs[k] = acc
        else:
            for d in range(n):
                dig[d] = 0
            if e == 0:
                for x in range(q):
                    t = values[x]
                    for d in range(n):
                        dig[d] += t % p
                        t //= p
            else:
                for x in range(1, q):
                    v = values[x]
                    if v != 0:
                        t = expt[(logt[x] * e + logt[v]) % m]
                        for d in range(n):
                            dig[d] += t % p
                            t //= p
            c = np.int64(0)
            shift = np.int64(1)
            for d in range(n):
                c += ((p - dig[d] % p) % p) * shift
                shift *= p
            coeffs[k] = c
    return coeffs


@njit(**_JIT)
def linear_power_sweep(S, zq, zq2, aemb, bemb, cemb, uext, tlist, expt, logt, addt):
    Q = len(S)
    m = Q - 1
    nu, nt, na, nb, nc = len(uext), len(tlist), len(aemb), len(bemb), len(cemb)
    verdicts = np.zeros(nu * nt * na * nb * nc, dtype=np.uint8)
    W = np.zeros(Q, dtype=np.int64)
    P = np.zeros(Q, dtype=np.int64)
    az = np.zeros(Q, dtype=np.int64)
    abz = np.zeros(Q, dtype=np.int64)
    seen = np.full(Q, -1, dtype=np.int64)
    stamp = 0
    idx = 0
    for iu in range(nu):
        u = uext[iu]
        for z in range(Q):
            W[z] = addt[S[z], u]
        for it in range(nt):
            t = tlist[it]
            for z in range(Q):
                w = W[z]
                P[z] = 0 if w == 0 else expt[(logt[w] * t) % m]
            for ia in range(na):
                a = aemb[ia]
                for z in range(Q):
                    az[z] = _mul2(a, np.int64(z), expt, logt, m)
                for ib in range(nb):
                    b = bemb[ib]
                    for z in range(Q):
                        abz[z] = addt[az[z], _mul2(b, zq[z], expt, logt, m)]
                    for ic in range(nc):
                        c = cemb[ic]
                        stamp += 1
                        ok = 1
                        for z in range(Q):
                            v = addt[addt[abz[z], _mul2(c, zq2[z], expt, logt, m)], P[z]]
                            if seen[v] == stamp:
                                ok = 0
                                break
                            seen[v] = stamp
                        verdicts[idx] = ok
                        idx += 1
    return verdicts
