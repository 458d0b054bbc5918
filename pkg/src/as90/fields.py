"""Finite fields GF(p^n) with a designated subfield GF(p^f).

A :class:`FieldCtx` fixes the prime p, the degree n, the modulus used
for the power-basis representation, and a subfield step f dividing n.
The step determines q = p^f and the distinguished automorphism
sigma: x -> x^q, whose fixed field is the "base" F = GF(q) that traces
and the Hilbert-90 formulas refer to.  Contexts are immutable values;
elements of distinct contexts never mix silently.

Frobenius maps, traces and subfield tests are F_p-linear, so each
context lazily caches the n x n matrices that realize them; after the
first call these operations cost one matrix-vector product.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from random import Random

from .errors import (
    BadSubfieldStep,
    CtxMismatch,
    DivisionByZero,
    FieldTooLarge,
    NoEmbedding,
    NotInSubgroup,
    NotPrime,
    OrderTooLarge,
    ReducibleModulus,
    ZeroElement,
    ZeroPolynomial,
)
from .intfactor import factorint
from .polys import PrimePoly, _count_vectors, default_modulus, is_irreducible, is_prime

SCALE_LIMIT = 2**64
_BSGS_PRIME_LIMIT = 2**32


@dataclass(frozen=True)
class FieldCtx:
    """Immutable description of GF(p^n) over the subfield GF(p^f)."""

    p: int
    n: int
    modulus: PrimePoly
    f: int = 1
    generator_hint: tuple | None = field(default=None, compare=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def q(self) -> int:
        """Order of the designated subfield."""
        return self.p**self.f

    @property
    def m(self) -> int:
        """Degree n/f of the extension over GF(q); order of sigma."""
        return self.n // self.f

    @property
    def order(self) -> int:
        return self.p**self.n

    def describe(self) -> str:
        base = f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"
        if self.f > 1:
            base += f"/GF({self.p}^{self.f})"
        return f"{base} mod {self.modulus}"

    def __str__(self) -> str:
        return self.describe()

    # -- element constructors ---------------------------------------------

    def elem(self, value) -> "FieldElem":
        """Coerce an int scalar, coefficient sequence, PrimePoly, or
        polynomial text into an element of this field."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise CtxMismatch("element belongs to a different field context")
            return value
        if isinstance(value, int):
            return FieldElem(self, (value % self.p,) + (0,) * (self.n - 1))
        if isinstance(value, str):
            value = PrimePoly.parse(value, self.p)
        if isinstance(value, PrimePoly):
            if value.p != self.p:
                raise CtxMismatch("polynomial has the wrong characteristic")
            value = value.coeffs
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.n:
            reduced = PrimePoly(self.p, coeffs) % self.modulus
            coeffs = list(reduced.coeffs)
        coeffs += [0] * (self.n - len(coeffs))
        return FieldElem(self, tuple(coeffs))

    def zero(self) -> "FieldElem":
        return self.elem(0)

    def one(self) -> "FieldElem":
        return self.elem(1)

    def gen(self) -> "FieldElem":
        """The residue class of t."""
        return self.elem(PrimePoly.x(self.p))

    def random_element(self, rng: Random) -> "FieldElem":
        return FieldElem(self, tuple(rng.randrange(self.p) for _ in range(self.n)))

    def elements_lex(self):
        """All field elements, smallest coefficient vector first
        (vectors compared low degree first)."""
        for v in _count_vectors(self.p, self.n):
            yield FieldElem(self, v)


@lru_cache(maxsize=None)
def _make_ctx_cached(p, n, modulus, f, generator_hint):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be at least 1")
    if p**n > SCALE_LIMIT:
        raise FieldTooLarge(f"{p}^{n} exceeds the supported scale 2^64")
    if f < 1 or n % f != 0:
        raise BadSubfieldStep(f"subfield step {f} does not divide {n}")
    if modulus is None:
        modulus = default_modulus(p, n)
    else:
        if modulus.p != p:
            raise CtxMismatch("modulus has the wrong characteristic")
        if modulus.degree != n:
            raise ReducibleModulus(
                f"modulus degree {modulus.degree} does not match n={n}"
            )
        modulus = modulus.monic()
        if not is_irreducible(modulus):
            raise ReducibleModulus(f"{modulus} is reducible over F_{p}")
    return FieldCtx(p, n, modulus, f, generator_hint)


def make_ctx(p: int, n: int, modulus=None, f: int = 1, generator_hint=None) -> FieldCtx:
    """Build a validated field context.

    Without an explicit modulus the lexicographically smallest monic
    irreducible of degree n is used (coefficients compared low degree
    first), so equal parameters always name the same field.  Equal
    parameters also return the same context object, letting the cached
    Frobenius matrices be shared.
    """
    if isinstance(modulus, str):
        modulus = PrimePoly.parse(modulus, p)
    elif isinstance(modulus, (list, tuple)):
        modulus = PrimePoly(p, modulus)
    if generator_hint is not None:
        generator_hint = tuple(generator_hint)
    return _make_ctx_cached(p, n, modulus, f, generator_hint)


class FieldElem:
    """An element of a :class:`FieldCtx`, stored as a coefficient tuple."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise CtxMismatch(
                    f"cannot mix elements of {self.ctx} and {other.ctx}"
                )
            return other
        if isinstance(other, int):
            return self.ctx.elem(other)
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.ctx.p
        return FieldElem(
            self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.ctx.p
        return FieldElem(
            self.ctx, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        ctx = self.ctx
        p = ctx.p
        a, b = self.coeffs, o.coeffs
        n = ctx.n
        out = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        mod = ctx.modulus.coeffs
        for k in range(2 * n - 2, n - 1, -1):
            c = out[k] % p
            if c:
                for i in range(n):
                    out[k - n + i] -= c * mod[i]
            out[k] = 0
        return FieldElem(ctx, tuple(c % p for c in out[:n]))

    __rmul__ = __mul__

    def inv(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        from .polys import xgcd

        g, s, _ = xgcd(self.to_poly(), self.ctx.modulus)
        assert g.degree == 0
        inv = s * pow(g.coeffs[0], -1, self.ctx.p)
        return self.ctx.elem(inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.ctx.elem(other) / self

    def __pow__(self, e: int) -> "FieldElem":
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ctx.elem(other)
        return (
            isinstance(other, FieldElem)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(self.coeffs)

    def to_poly(self) -> PrimePoly:
        return PrimePoly(self.ctx.p, self.coeffs)

    def __str__(self) -> str:
        return str(self.to_poly())

    def __repr__(self) -> str:
        return f"<{self} in {self.ctx.describe()}>"


# -- F_p linear algebra ----------------------------------------------------


def _mat_identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a, b, p: int):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def _mat_vec(a, v, p: int):
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def _mat_add(a, b, p: int):
    return [[(x + y) % p for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def nullspace(mat, p: int) -> list[tuple]:
    """Basis of the kernel of mat over F_p (row-reduced, deterministic)."""
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] % p:
                fac = rows[i][c]
                rows[i] = [(x - fac * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for pr, pc in enumerate(pivots):
            v[pc] = -rows[pr][fc] % p
        basis.append(tuple(v))
    return basis


def solve_in_span(columns, target, p: int):
    """Coordinates expressing target in the span of the given columns,
    or None if target is outside.  Vectors are coefficient tuples."""
    if not columns:
        return [] if all(c % p == 0 for c in target) else None
    n = len(target)
    aug = [[col[i] for col in columns] + [target[i]] for i in range(n)]
    ncols = len(columns)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, n) if aug[i][c] % p), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                fac = aug[i][c]
                aug[i] = [(x - fac * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if aug[i][ncols] % p:
            return None
    coords = [0] * ncols
    for pr, pc in enumerate(pivots):
        coords[pc] = aug[pr][ncols]
    return coords


# -- Frobenius, trace, subfields --------------------------------------------


def _frob_matrix(ctx: FieldCtx, j: int):
    """Matrix of x -> x^(p^j) in the power basis, cached per context."""
    j %= ctx.n
    cache = ctx._cache.setdefault("frob", {})
    if j in cache:
        return cache[j]
    if 0 not in cache:
        cache[0] = _mat_identity(ctx.n)
    if 1 not in cache and ctx.n > 0:
        cols = []
        xp = PrimePoly.x(ctx.p).pow_mod(ctx.p, ctx.modulus)
        col = PrimePoly.one(ctx.p)
        for _ in range(ctx.n):
            cs = list(col.coeffs) + [0] * (ctx.n - len(col.coeffs))
            cols.append(cs)
            col = col * xp % ctx.modulus
        cache[1] = [[cols[i][r] for i in range(ctx.n)] for r in range(ctx.n)]
    k = max(i for i in cache if i <= j)
    mat = cache[k]
    while k < j:
        mat = _mat_mul(mat, cache[1], ctx.p)
        k += 1
        cache[k] = mat
    return cache[j]


def frobenius(a: FieldElem, k: int = 1) -> FieldElem:
    """sigma^k(a) = a^(q^k), where sigma is the designated generator
    x -> x^q of the Galois group over GF(q).  k may be any integer."""
    ctx = a.ctx
    j = (ctx.f * k) % ctx.n
    return FieldElem(ctx, _mat_vec(_frob_matrix(ctx, j), a.coeffs, ctx.p))


def _trace_matrix(ctx: FieldCtx, d: int):
    cache = ctx._cache.setdefault("trace", {})
    if d not in cache:
        acc = _mat_identity(ctx.n)
        total = acc
        for _ in range(ctx.n // d - 1):
            acc = _mat_mul(acc, _frob_matrix(ctx, d), ctx.p)
            total = _mat_add(total, acc, ctx.p)
        cache[d] = total
    return cache[d]


def trace(a: FieldElem, down_to: int | None = None) -> FieldElem:
    """Trace of a from GF(p^n) onto the degree-``down_to`` subfield
    (default: the designated subfield GF(q)).  The result is returned as
    an element of the big field and always lands in that subfield."""
    ctx = a.ctx
    d = ctx.f if down_to is None else down_to
    if d < 1 or ctx.n % d != 0:
        raise BadSubfieldStep(f"no subfield of degree {d} inside degree {ctx.n}")
    return FieldElem(ctx, _mat_vec(_trace_matrix(ctx, d), a.coeffs, ctx.p))


def degree_over_subfield(a: FieldElem, d: int | None = None) -> int:
    """Degree of a over the degree-d subfield: the size of the orbit of
    a under x -> x^(p^d)."""
    ctx = a.ctx
    d = ctx.f if d is None else d
    if d < 1 or ctx.n % d != 0:
        raise BadSubfieldStep(f"no subfield of degree {d} inside degree {ctx.n}")
    mat = _frob_matrix(ctx, d)
    cur = _mat_vec(mat, a.coeffs, ctx.p)
    k = 1
    while cur != a.coeffs:
        cur = _mat_vec(mat, cur, ctx.p)
        k += 1
    return k


def subfield_elements(ctx: FieldCtx, d: int | None = None) -> list[FieldElem]:
    """All elements of the degree-d subfield of ctx, sorted by
    coefficient tuple.  The subfield is the kernel of x^(p^d) - x."""
    d = ctx.f if d is None else d
    if d < 1 or ctx.n % d != 0:
        raise BadSubfieldStep(f"no subfield of degree {d} inside degree {ctx.n}")
    if ctx.p**d > 2**20:
        raise FieldTooLarge(f"refusing to enumerate {ctx.p}^{d} subfield elements")
    key = ("subfield", d)
    if key in ctx._cache:
        return ctx._cache[key]
    p = ctx.p
    mat = [row[:] for row in _frob_matrix(ctx, d)]
    for i in range(ctx.n):
        mat[i][i] = (mat[i][i] - 1) % p
    basis = nullspace(mat, p)
    assert len(basis) == d
    out = []
    for combo in _count_vectors(p, d):
        v = [0] * ctx.n
        for c, b in zip(combo, basis):
            if c:
                for i in range(ctx.n):
                    v[i] = (v[i] + c * b[i]) % p
        out.append(FieldElem(ctx, tuple(v)))
    out = sorted(set(out), key=lambda e: e.coeffs)
    assert len(out) == p**d
    ctx._cache[key] = out
    return out


# -- multiplicative structure ------------------------------------------------


def element_order(a: FieldElem, factors: dict[int, int] | None = None) -> int:
    """Multiplicative order of a nonzero element."""
    if a.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    group = a.ctx.order - 1
    if factors is None:
        factors = factorint(group)
    m = group
    for prime, exp in factors.items():
        for _ in range(exp):
            if m % prime == 0 and (a ** (m // prime)) == 1:
                m //= prime
            else:
                break
    assert a**m == 1
    return m


def _bsgs(ctx: FieldCtx, gamma: FieldElem, h: FieldElem, ell: int) -> int:
    """Discrete log of h base gamma where gamma has prime order ell."""
    if ell > _BSGS_PRIME_LIMIT:
        raise OrderTooLarge(f"prime factor {ell} too large for baby-step giant-step")
    width = 1
    while width * width < ell:
        width += 1
    cache = ctx._cache.setdefault("bsgs", {})
    key = gamma.coeffs
    if key not in cache:
        table = {}
        cur = ctx.one()
        for j in range(width):
            table.setdefault(cur.coeffs, j)
            cur = cur * gamma
        cache[key] = (table, (gamma**width).inv())
    table, giant = cache[key]
    y = h
    for i in range(width + 1):
        j = table.get(y.coeffs)
        if j is not None:
            return (i * width + j) % ell
        y = y * giant
    raise NotInSubgroup("no discrete log in the cyclic group generated by base")


def discrete_log(base: FieldElem, target: FieldElem,
                 factors: dict[int, int] | None = None) -> int:
    """Exact discrete log: the least x >= 0 with base^x = target.

    Pohlig-Hellman over the factorization of the order of ``base``, with
    baby-step giant-step inside each prime subgroup.  Raises
    NotInSubgroup when target is outside the cyclic group generated by
    base; never returns a wrong answer.
    """
    if base.is_zero() or target.is_zero():
        raise ZeroElement("discrete logs live in the multiplicative group")
    ctx = base.ctx
    m = element_order(base, factors)
    if target**m != 1:
        raise NotInSubgroup("target is not a power of base")
    residues = []
    for prime, exp in sorted(factorint(m).items()):
        pe = prime**exp
        gamma = base ** (m // prime)
        x_pe = 0
        for j in range(exp):
            h = (target * (base ** (-x_pe))) ** (m // prime ** (j + 1))
            d = _bsgs(ctx, gamma, h, prime)
            x_pe += d * prime**j
        residues.append((x_pe, pe))
    x, mod = 0, 1
    for r, pe in residues:
        # combine x (mod mod) with r (mod pe)
        delta = (r - x) % pe
        step = pow(mod % pe, -1, pe) if pe > 1 else 0
        x += mod * (delta * step % pe)
        mod *= pe
    x %= mod
    if base**x != target:
        raise NotInSubgroup("pohlig-hellman reconstruction failed membership")
    return x


# -- polynomials with FieldElem coefficients (internal helpers) --------------


def _fp_trim(cs: list[FieldElem]) -> list[FieldElem]:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _fp_mul(a, b, ctx: FieldCtx):
    if not a or not b:
        return []
    out = [ctx.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return _fp_trim(out)


def _fp_divmod(a, b, ctx: FieldCtx):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _fp_trim(rem)
    inv = b[-1].inv()
    quo = [ctx.zero()] * (len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        c = rem[k + db] * inv
        if not c.is_zero():
            quo[k] = c
            for i, bc in enumerate(b):
                rem[k + i] = rem[k + i] - c * bc
    return _fp_trim(quo), _fp_trim(rem[:db])


def _fp_mod(a, b, ctx):
    return _fp_divmod(a, b, ctx)[1]


def _fp_monic(a, ctx):
    if not a:
        return a
    inv = a[-1].inv()
    return [c * inv for c in a]


def _fp_gcd(a, b, ctx):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_mod(a, b, ctx)
    return _fp_monic(a, ctx)


def _fp_powmod(base, e: int, mod, ctx: FieldCtx):
    result = _fp_mod([ctx.one()], mod, ctx)
    base = _fp_mod(list(base), mod, ctx)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, ctx), mod, ctx)
        base = _fp_mod(_fp_mul(base, base, ctx), mod, ctx)
        e >>= 1
    return result


def roots_in_field(coeffs, ctx: FieldCtx) -> list[FieldElem]:
    """All roots in ctx of a polynomial with coefficients in ctx.

    ``coeffs`` is a low-degree-first sequence of FieldElem (or values
    coercible by ctx.elem).  Seeded equal-degree splitting makes the
    procedure deterministic; roots come back sorted by coefficient
    tuple, with multiplicity collapsed.
    """
    f = _fp_trim([ctx.elem(c) for c in coeffs])
    if not f:
        raise ZeroPolynomial("the zero polynomial has every root")
    f = _fp_monic(f, ctx)
    roots = []
    while len(f) > 1 and f[0].is_zero():
        roots.append(ctx.zero())
        f = f[1:]
    if len(f) > 1:
        # gcd with X^|E| - X isolates the distinct roots lying in ctx
        xq = _fp_powmod([ctx.zero(), ctx.one()], ctx.order, f, ctx)
        diff = _fp_trim([a - b for a, b in zip_pad(xq, [ctx.zero(), ctx.one()], ctx)])
        lin = _fp_gcd(diff, f, ctx)
        roots.extend(_split_linear(lin, ctx))
    return sorted(set(roots), key=lambda e: e.coeffs)


def zip_pad(a, b, ctx):
    width = max(len(a), len(b))
    a = list(a) + [ctx.zero()] * (width - len(a))
    b = list(b) + [ctx.zero()] * (width - len(b))
    return zip(a, b)


def _split_linear(g, ctx: FieldCtx) -> list[FieldElem]:
    """Roots of a monic product of distinct linear factors over ctx."""
    rng = Random(0xE17)
    out = []
    stack = [g]
    guard = 0
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            out.append(-g[0])
            continue
        guard += 1
        if guard > 400 * len(g):
            raise RuntimeError("root splitting failed to converge")
        u = [ctx.random_element(rng) for _ in range(len(g) - 1)]
        if ctx.p == 2:
            # absolute trace map onto F_2 splits the roots in two
            w = _fp_mod(u, g, ctx)
            acc = w
            for _ in range(ctx.n - 1):
                w = _fp_mod(_fp_mul(w, w, ctx), g, ctx)
                acc = [a + b for a, b in zip_pad(acc, w, ctx)]
            h = _fp_gcd(_fp_trim(acc), g, ctx)
        else:
            w = _fp_powmod(u, (ctx.order - 1) // 2, g, ctx)
            w = list(w)
            if w:
                w[0] = w[0] - ctx.one()
            else:
                w = [-ctx.one()]
            h = _fp_gcd(_fp_trim(w), g, ctx)
        if 0 < len(h) - 1 < len(g) - 1:
            stack.append(h)
            stack.append(_fp_divmod(g, h, ctx)[0])
        else:
            stack.append(g)
    return out


# -- subfield embeddings ------------------------------------------------------


_EMBED_CACHE: dict[tuple[FieldCtx, FieldCtx], FieldElem] = {}


def _embedding_image(src: FieldCtx, dst: FieldCtx) -> FieldElem:
    key = (src, dst)
    if key not in _EMBED_CACHE:
        if src.n == dst.n and src.modulus == dst.modulus:
            theta = dst.gen()
        else:
            candidates = roots_in_field(
                [dst.elem(c) for c in src.modulus.coeffs], dst
            )
            assert candidates, "an irreducible of dividing degree must split"
            theta = candidates[0]
        _EMBED_CACHE[key] = theta
    return _EMBED_CACHE[key]


def subfield_embed(a: FieldElem, target: FieldCtx) -> FieldElem:
    """Canonical embedding GF(p^d) -> GF(p^n) for d | n.

    The generator of the source field maps to the lexicographically
    smallest root of the source modulus in the target, fixed once per
    context pair, so the map is a consistent ring homomorphism across
    calls.
    """
    src = a.ctx
    if src == target:
        return a
    if src.p != target.p:
        raise NoEmbedding("different characteristics")
    if target.n % src.n != 0:
        raise NoEmbedding(f"degree {src.n} does not divide {target.n}")
    theta = _embedding_image(src, target)
    acc = target.zero()
    for c in reversed(a.coeffs):
        acc = acc * theta + target.elem(c)
    return acc


def subfield_section(a: FieldElem, sub: FieldCtx) -> FieldElem:
    """Inverse of subfield_embed: express a as an element of sub.

    Solves for coordinates of a over the embedded power basis of sub;
    raises NoEmbedding when a lies outside the image.
    """
    ctx = a.ctx
    if ctx == sub:
        return a
    if sub.p != ctx.p or ctx.n % sub.n != 0:
        raise NoEmbedding(f"no copy of {sub.describe()} inside {ctx.describe()}")
    theta = _embedding_image(sub, ctx)
    basis = [ctx.one()]
    for _ in range(sub.n - 1):
        basis.append(basis[-1] * theta)
    combo = solve_in_span([b.coeffs for b in basis], a.coeffs, ctx.p)
    if combo is None:
        raise NoEmbedding("element does not lie in the embedded subfield")
    return sub.elem(combo)
