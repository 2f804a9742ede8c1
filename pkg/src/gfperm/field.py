"""Finite fields GF(p^n) and explicit quadratic / cubic extension towers.

Elements of a field of order q are encoded as the integers [0, q).  For a
field built directly over its prime field the little-endian base-p digits of
the encoding are the coordinates in the polynomial basis of the defining
modulus.  A tower extension of degree k over a base field of order q0 encodes
z = x0 + x1*root + ... as x0 + q0*x1 + ..., so digit extraction in base q0
recovers the coordinates with respect to the adjoined root.

Construction is deterministic: when no modulus is given, the canonical choice
is the monic irreducible whose little-endian coefficient encoding is the
smallest integer, so rebuilding GF(p^n) always yields bit-identical
encodings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapError, FieldError, ReducibleModulusError, SpecParseError

# Hard bound on field order: encodings must stay machine-word sized.
MAX_ORDER = 1 << 32
# exp/log tables are only built below this order.
TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> list[int]:
    """Distinct prime factors of n (trial division; n fits a machine word)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _digits(value: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        out.append(value % p)
        value //= p
    return out


def _undigits(ds, p: int) -> int:
    value = 0
    for d in reversed(ds):
        value = value * p + d
    return value


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p), coefficients as little-endian int lists.
# ---------------------------------------------------------------------------

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul_gfp(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod_gfp(a, b, p):
    # b monic is not assumed; p prime so the leading coefficient is invertible
    a = list(a)
    _poly_trim(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        _poly_trim(a)
    return a


def _reducible_witness(coeffs, p):
    """A nontrivial monic factor of the given polynomial, or None if irreducible.

    Trial division by every monic polynomial of degree 1..deg/2.
    """
    deg = len(coeffs) - 1
    if deg <= 0:
        return None
    for d in range(1, deg // 2 + 1):
        for low in range(p ** d):
            cand = _digits(low, p, d) + [1]
            if not _poly_mod_gfp(coeffs, cand, p):
                return tuple(cand)
    return None


_CANONICAL_CACHE: dict[tuple[int, int], tuple[int, ...]] = {}


def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """First monic irreducible of degree n over GF(p) by integer coefficient encoding."""
    key = (p, n)
    if key not in _CANONICAL_CACHE:
        for low in range(p ** n):
            cand = _digits(low, p, n) + [1]
            if n > 1 and cand[0] == 0:
                continue  # divisible by x
            if _reducible_witness(cand, p) is None:
                _CANONICAL_CACHE[key] = tuple(cand)
                break
        else:  # pragma: no cover - irreducibles always exist
            raise FieldError(f"no irreducible of degree {n} over GF({p})")
    return _CANONICAL_CACHE[key]


# ---------------------------------------------------------------------------
# Fractional exponents resolved mod q-1.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FracExp:
    """Formal exponent num/den, resolved mod q-1 when bound to a field.

    A nonzero formal exponent resolves into [1, q-1]; the formal exponent 0
    resolves to 0.  Resolution requires gcd(den, q-1) = 1.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise FieldError("exponent denominator must be nonzero")
        if self.den < 0:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)

    def resolve(self, q: int) -> int:
        if self.num == 0:
            return 0
        m = q - 1
        if math.gcd(self.den, m) != 1:
            raise FieldError(
                f"exponent denominator {self.den} not invertible mod {m}")
        r = (self.num * pow(self.den, -1, m)) % m if m > 1 else 0
        return r if r else m

    def __str__(self):
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


def resolve_exponent(e, q: int) -> int:
    """Resolve an int or FracExp exponent per the pow convention."""
    if isinstance(e, FracExp):
        return e.resolve(q)
    if e == 0:
        return 0
    m = q - 1
    if m <= 1:
        return 1
    r = e % m
    return r if r else m


# ---------------------------------------------------------------------------
# Field contexts.
# ---------------------------------------------------------------------------

class FieldCtx:
    """A concrete finite field; immutable after construction.

    Use :func:`build_field`, :func:`extend_quadratic` or :func:`extend_cubic`
    to create one.  Identity comparison is intentional: elements belong to the
    specific context object that created them.
    """

    def __init__(self, p, n, modulus, base=None, defining=None, spec=None):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = modulus          # over GF(p); None for tower fields
        self.base = base                # subfield link
        self.defining = defining        # monic poly over base (encodings)
        self.step = len(defining) - 1 if defining else None
        self.root = base.q if base is not None else None
        self.omega = None               # cubic towers: scalar with root^q = omega*root
        self._spec = spec
        self._modbits = _undigits(modulus, 2) if (p == 2 and modulus) else None
        self._exp = None
        self._log = None
        self._exp_np = None
        self._log_np = None
        self._generator = None
        self._factors_q1 = None
        self._pow_tables = {}

    # -- scalar arithmetic on encodings ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        r = 0
        shift = 1
        for _ in range(self.n):
            r += ((a % p) + (b % p)) % p * shift
            a //= p
            b //= p
            shift *= p
        return r

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        r = 0
        shift = 1
        for _ in range(self.n):
            r += (p - (a % p)) % p * shift
            a //= p
            shift *= p
        return r

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self.mul_direct(a, b)

    def mul_direct(self, a: int, b: int) -> int:
        """Table-free multiplication; the reference path tables are checked against."""
        if self.base is not None:
            return self._mul_tower(a, b)
        if self.n == 1:
            return (a * b) % self.p
        if self.p == 2:
            return self._mul_bits(a, b)
        return self._mul_digits(a, b)

    def _mul_bits(self, a, b):
        n = self.n
        mod = self._modbits
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> n) & 1:
                a ^= mod
        return r

    def _mul_digits(self, a, b):
        p, n = self.p, self.n
        da = _digits(a, p, n)
        db = _digits(b, p, n)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(n):
                    prod[i - n + j] = (prod[i - n + j] - c * mod[j]) % p
        return _undigits(prod[:n], p)

    def _mul_tower(self, a, b):
        base = self.base
        k = self.step
        q0 = base.q
        da = _digits(a, q0, k)
        db = _digits(b, q0, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = base.sub(
                        prod[i - k + j], base.mul(c, self.defining[j]))
        return _undigits(prod[:k], q0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("division by zero")
        if self._exp is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow_int(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_int(self, a: int, e: int) -> int:
        """a**e with e any integer; for a != 0 the exponent acts mod q-1."""
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise FieldError("zero has no negative power")
        e %= self.q - 1 if self.q > 2 else 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def pow(self, a: int, e) -> int:
        """Power map with the total-function convention.

        The exponent (int or FracExp) is resolved mod q-1 into [1, q-1] when
        formally nonzero; 0**e = 0 for resolved e >= 1 and 0**0 = 1.  This
        makes x**(q-2) the inverse-or-zero map and x**(q-1) the indicator of
        nonzero.
        """
        r = resolve_exponent(e, self.q)
        if r == 0:
            return 1
        if a == 0:
            return 0
        return self.pow_int(a, r)

    def frob(self, a: int, j: int = 1) -> int:
        """Frobenius iterate a**(p**j)."""
        return self.pow_int(a, self.p ** (j % self.n)) if a else 0

    # -- generators and tables ---------------------------------------------

    def _q1_factors(self):
        if self._factors_q1 is None:
            self._factors_q1 = factorize(self.q - 1) if self.q > 2 else []
        return self._factors_q1

    def generator_enc(self) -> int:
        """Smallest-encoded generator of the multiplicative group."""
        if self._generator is None:
            m = self.q - 1
            for a in range(1, self.q):
                if all(self.pow_int(a, m // f) != 1 for f in self._q1_factors()):
                    self._generator = a
                    break
        return self._generator

    def is_generator_enc(self, a: int) -> bool:
        if a == 0:
            return False
        m = self.q - 1
        return all(self.pow_int(a, m // f) != 1 for f in self._q1_factors())

    def ensure_tables(self) -> bool:
        """Build exp/log tables from the smallest generator; False above TABLE_LIMIT."""
        if self._exp is not None:
            return True
        if self.q > TABLE_LIMIT:
            return False
        g = self.generator_enc()
        m = self.q - 1
        exp = [1] * m
        log = [-1] * self.q
        log[1] = 0
        acc = 1
        for i in range(1, m):
            acc = self.mul_direct(acc, g)
            exp[i] = acc
            log[acc] = i
        self._exp = exp
        self._log = log
        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        return True

    @property
    def tables_ready(self) -> bool:
        return self._exp is not None

    def exp_log_np(self):
        if not self.ensure_tables():
            raise CapError(f"field of order {self.q} exceeds the table limit")
        return self._exp_np, self._log_np

    def pow_table(self, e) -> np.ndarray:
        """Value table of x**e over the whole field (pow convention)."""
        r = resolve_exponent(e, self.q)
        if r in self._pow_tables:
            return self._pow_tables[r]
        expt, logt = self.exp_log_np()
        out = np.empty(self.q, dtype=np.int64)
        if r == 0:
            out[:] = 1
        else:
            out[0] = 0
            nz = np.arange(1, self.q)
            out[1:] = expt[(logt[nz] * r) % (self.q - 1)]
        out.setflags(write=False)
        self._pow_tables[r] = out
        return out

    def frob_table(self, j: int = 1) -> np.ndarray:
        return self.pow_table(FracExp(self.p ** (j % self.n)))

    def inv0_table(self) -> np.ndarray:
        """x**(q-2): inverse on nonzero, 0 at 0."""
        return self.pow_table(FracExp(self.q - 2))

    # -- vectorized helpers (element encodings in int64 arrays) -------------

    def add_vec(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        p = self.p
        aa = np.asarray(a, dtype=np.int64)
        bb = np.asarray(b, dtype=np.int64)
        shape = np.broadcast(aa, bb).shape
        out = np.zeros(shape, dtype=np.int64)
        aa = np.broadcast_to(aa, shape).copy()
        bb = np.broadcast_to(bb, shape).copy()
        shift = 1
        for _ in range(self.n):
            out += ((aa % p) + (bb % p)) % p * shift
            aa //= p
            bb //= p
            shift *= p
        return out

    def neg_vec(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        p = self.p
        out = np.zeros_like(a)
        aa = a.copy()
        shift = 1
        for _ in range(self.n):
            out += (p - (aa % p)) % p * shift
            aa //= p
            shift *= p
        return out

    def mul_vec(self, a, b):
        expt, logt = self.exp_log_np()
        shape = np.broadcast(np.asarray(a), np.asarray(b)).shape
        a = np.broadcast_to(np.asarray(a, dtype=np.int64), shape)
        b = np.broadcast_to(np.asarray(b, dtype=np.int64), shape)
        nz = (a != 0) & (b != 0)
        out = np.zeros(shape, dtype=np.int64)
        out[nz] = expt[(logt[a[nz]] + logt[b[nz]]) % (self.q - 1)]
        return out

    # -- tower navigation ----------------------------------------------------

    def embed(self, a: int) -> int:
        """Encoding of a base-field element inside this tower field."""
        if self.base is None:
            raise FieldError("field has no subfield link")
        if not 0 <= a < self.base.q:
            raise FieldError("not a base-field encoding")
        return a

    def project(self, a: int):
        """Base-field encoding of a, or None when a is outside the subfield image."""
        if self.base is None:
            raise FieldError("field has no subfield link")
        if a != 0 and self.pow_int(a, self.base.q) != a:
            return None
        # the subfield image sits exactly on the low encodings
        return a if a < self.base.q else None

    def trace_to_base(self, a: int) -> int:
        """Relative trace onto the base field of the tower step."""
        if self.base is None:
            raise FieldError("trace requires a subfield link")
        acc = a
        conj = a
        for _ in range(self.step - 1):
            conj = self.pow_int(conj, self.base.q) if conj else 0
            acc = self.add(acc, conj)
        out = self.project(acc)
        if out is None:  # pragma: no cover - trace always lands in the base
            raise FieldError("trace left the base field")
        return out

    def abs_trace(self, a: int) -> int:
        """Absolute trace to GF(p), returned as an integer in [0, p)."""
        acc = a
        conj = a
        for _ in range(self.n - 1):
            conj = self.frob(conj)
            acc = self.add(acc, conj)
        return acc

    # -- element helpers -----------------------------------------------------

    def elem(self, v: int) -> "FieldElem":
        return FieldElem(self, v)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def elems(self):
        for v in range(self.q):
            yield FieldElem(self, v)

    # -- description ----------------------------------------------------------

    def modulus_enc(self):
        if self.modulus is None:
            return None
        return _undigits(self.modulus, self.p)

    def spec_string(self) -> str:
        if self._spec:
            return self._spec
        if self.base is not None:
            return f"{self.base.spec_string()}:{self.step}"
        s = f"{self.p}^{self.n}" if self.n > 1 else f"{self.p}"
        if self.modulus != canonical_modulus(self.p, self.n):
            s += f"/mod={self.modulus_enc()}"
        return s

    def poly_str(self, coeffs, var="x") -> str:
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xs = var if i == 1 else f"{var}^{i}"
                terms.append(xs if c == 1 else f"{c}*{xs}")
        return " + ".join(terms) if terms else "0"

    def describe(self) -> dict:
        d = {
            "spec": self.spec_string(),
            "p": self.p,
            "n": self.n,
            "order": self.q,
            "generator": self.generator_enc(),
        }
        if self.base is None:
            d["modulus"] = self.modulus_enc()
            d["modulus_poly"] = self.poly_str(self.modulus)
        else:
            d["base"] = self.base.describe()
            d["defining"] = list(self.defining)
            d["defining_poly"] = self.poly_str(self.defining)
            d["root"] = self.root
            if self.omega is not None:
                d["omega"] = self.omega
        return d

    def __repr__(self):
        return f"GF({self.q})[{self.spec_string()}]"


@dataclass(frozen=True)
class FieldElem:
    """An element of a FieldCtx: the context plus its integer encoding."""

    ctx: FieldCtx
    enc: int

    def __post_init__(self):
        if not 0 <= self.enc < self.ctx.q:
            raise FieldError(f"encoding {self.enc} outside [0, {self.ctx.q})")

    def _peer(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise FieldError("elements from different field contexts")
            return other.enc
        if isinstance(other, int):
            return other % self.ctx.p if self.ctx.n == 1 else other
        raise TypeError(f"cannot combine FieldElem with {type(other)!r}")

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.enc, self._peer(other)))

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.enc, self._peer(other)))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.enc, self._peer(other)))

    def __truediv__(self, other):
        return FieldElem(self.ctx, self.ctx.div(self.enc, self._peer(other)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.enc))

    def __pow__(self, e):
        return FieldElem(self.ctx, self.ctx.pow(self.enc, e))

    def inv(self):
        return FieldElem(self.ctx, self.ctx.inv(self.enc))

    def frob(self, j=1):
        return FieldElem(self.ctx, self.ctx.frob(self.enc, j))

    def __bool__(self):
        return self.enc != 0

    def __repr__(self):
        return f"{self.enc}@GF({self.ctx.q})"


# ---------------------------------------------------------------------------
# Constructors.
# ---------------------------------------------------------------------------

def build_field(p: int, n: int, modulus=None) -> FieldCtx:
    """GF(p^n) over the prime field.

    When no modulus is given the canonical one (smallest integer coefficient
    encoding) is selected.  A reducible modulus is rejected with a witness
    factor.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    if p ** n > MAX_ORDER:
        raise FieldError(f"field order {p}^{n} exceeds the 2^32 encoding bound")
    if modulus is None:
        modulus = canonical_modulus(p, n)
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {n}")
        witness = _reducible_witness(list(modulus), p)
        if witness is not None:
            raise ReducibleModulusError(
                f"modulus is reducible; factor {witness}", witness)
    return FieldCtx(p, n, modulus)


def smallest_nonsquare(ctx: FieldCtx) -> int:
    if ctx.p == 2:
        raise FieldError("every element of a characteristic-2 field is a square")
    h = (ctx.q - 1) // 2
    for a in range(1, ctx.q):
        if ctx.pow_int(a, h) != 1:
            return a
    raise FieldError("no nonsquare found")  # pragma: no cover


def smallest_noncube(ctx: FieldCtx) -> int:
    if ctx.q % 3 != 1:
        raise FieldError("cubes cover the whole group unless q = 1 mod 3")
    h = (ctx.q - 1) // 3
    for a in range(1, ctx.q):
        if ctx.pow_int(a, h) != 1:
            return a
    raise FieldError("no noncube found")  # pragma: no cover


def extend_quadratic(base: FieldCtx, defining=None) -> FieldCtx:
    """Degree-2 tower extension of base.

    Default defining polynomial: x^2 - b with b the smallest-encoded
    nonsquare for odd base, x^2 + x + c with c the smallest-encoded element
    of absolute trace 1 for even base.
    """
    if base.q * base.q > MAX_ORDER:
        raise FieldError("extension order exceeds the 2^32 encoding bound")
    if defining is None:
        if base.p == 2:
            c = next(a for a in range(base.q) if base.abs_trace(a) == 1)
            defining = (c, 1, 1)
        else:
            b = smallest_nonsquare(base)
            defining = (base.neg(b), 0, 1)
    else:
        defining = tuple(defining)
        if len(defining) != 3 or defining[-1] != 1:
            raise FieldError("defining polynomial must be monic of degree 2")
    for r in range(base.q):
        v = base.add(base.mul(base.mul(r, r), defining[2]),
                     base.add(base.mul(r, defining[1]), defining[0]))
        if v == 0:
            raise ReducibleModulusError(
                f"defining polynomial has root {r} in the base field", r)
    return FieldCtx(base.p, base.n * 2, None, base=base, defining=defining)


def find_generator(ctx: FieldCtx) -> FieldElem:
    """Smallest-encoded generator of the multiplicative group."""
    return FieldElem(ctx, ctx.generator_enc())


def is_generator(a: FieldElem) -> bool:
    """Whether a has multiplicative order q - 1."""
    return a.ctx.is_generator_enc(a.enc)


_QUAD_CACHE: dict[int, FieldCtx] = {}


def canonical_quad_ext(base: FieldCtx) -> FieldCtx:
    """Shared default quadratic extension of a context (cached by identity)."""
    key = id(base)
    if key not in _QUAD_CACHE:
        _QUAD_CACHE[key] = extend_quadratic(base)
    return _QUAD_CACHE[key]


def extend_cubic(base: FieldCtx) -> FieldCtx:
    """Degree-3 tower x^3 - b with b the smallest-encoded noncube; needs q = 1 mod 3.

    The returned context carries the cube root of unity omega = b^((q-1)/3)
    (a base element) satisfying root^q = omega * root.
    """
    if base.q % 3 != 1:
        raise FieldError(f"base order {base.q} is not 1 mod 3")
    if base.q ** 3 > MAX_ORDER:
        raise FieldError("extension order exceeds the 2^32 encoding bound")
    b = smallest_noncube(base)
    ext = FieldCtx(base.p, base.n * 3, None, base=base,
                   defining=(base.neg(b), 0, 0, 1))
    omega = base.pow_int(b, (base.q - 1) // 3)
    ext.omega = omega
    # construction-time sanity: root^q = omega*root, omega a primitive cube root
    root = ext.root
    assert ext.pow_int(root, base.q) == ext.mul(ext.embed(omega), root)
    assert omega != 1 and base.pow_int(omega, 3) == 1
    assert base.add(base.add(1, omega), base.mul(omega, omega)) == 0
    return ext


# ---------------------------------------------------------------------------
# Field spec strings: "p^n", optional "/mod=<int>", tower suffixes ":2" / ":3".
# ---------------------------------------------------------------------------

def parse_field_spec(spec: str) -> FieldCtx:
    s = spec.strip()
    parts = s.split(":")
    atom = parts[0]
    pos = 0
    mod_enc = None
    if "/" in atom:
        atom, _, tail = atom.partition("/")
        if not tail.startswith("mod="):
            raise SpecParseError(
                f"unknown field option {tail!r} in {spec!r}",
                pos=spec.index("/") + 1)
        try:
            mod_enc = int(tail[4:])
        except ValueError:
            raise SpecParseError(
                f"bad modulus encoding {tail[4:]!r} in {spec!r}",
                pos=spec.index("=") + 1) from None
    if "^" in atom:
        ps, _, ns = atom.partition("^")
    else:
        ps, ns = atom, "1"
    try:
        p = int(ps)
        n = int(ns)
    except ValueError:
        raise SpecParseError(f"bad field atom {atom!r} in {spec!r}", pos=pos) from None
    modulus = _digits(mod_enc, p, n + 1) if mod_enc is not None else None
    if modulus is not None and _undigits(modulus, p) != mod_enc:
        raise SpecParseError(f"modulus encoding {mod_enc} too large for degree {n}")
    ctx = build_field(p, n, modulus)
    for k in parts[1:]:
        if k == "2":
            ctx = extend_quadratic(ctx)
        elif k == "3":
            ctx = extend_cubic(ctx)
        else:
            raise SpecParseError(
                f"tower step must be 2 or 3, got {k!r} in {spec!r}",
                pos=spec.index(":" + k) + 1)
    return ctx
