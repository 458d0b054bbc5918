"""Dense polynomials over a prime field F_p.

Coefficients are stored low degree first as a tuple of ints in
``range(p)``.  Instances are immutable and hashable, so they can key
caches and serve as field moduli.  Two text formats are supported:

* human form, highest degree first: ``t^4+t^3+1`` or ``2t^3+t+2``;
* coefficient form, low degree first: ``p:2;coeffs:1,0,0,1,1``.
"""

from __future__ import annotations

import re
from random import Random

from .errors import DivisionByZero, NotPrime, ZeroPolynomial

_TERM_RE = re.compile(r"^(\d*)\s*\*?\s*t(?:\^(\d+))?$")

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic primality test, exact for every m < 3.3e24."""
    if m < 2:
        return False
    for sp in _SMALL_PRIMES:
        if m % sp == 0:
            return m == sp
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class PrimePoly:
    """A polynomial with coefficients in F_p."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PrimePoly is immutable")

    # -- basic structure --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrimePoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "PrimePoly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "PrimePoly":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int, degree: int = 1) -> "PrimePoly":
        """The monomial t^degree."""
        return cls(p, (0,) * degree + (1,))

    @classmethod
    def parse(cls, text: str, p: int | None = None) -> "PrimePoly":
        """Parse either text format; coefficient form carries its own p."""
        text = text.strip()
        if text.startswith("p:"):
            head, _, tail = text.partition(";")
            pp = int(head[2:])
            if p is not None and p != pp:
                raise ValueError(f"coefficient form says p={pp}, caller says p={p}")
            if not tail.startswith("coeffs:"):
                raise ValueError(f"bad coefficient form: {text!r}")
            body = tail[len("coeffs:"):].strip()
            coeffs = [int(c) for c in body.split(",")] if body else []
            return cls(pp, coeffs)
        if p is None:
            raise ValueError("human polynomial form needs an explicit p")
        text = text.replace(" ", "").replace("−", "-")
        if text in ("0", ""):
            return cls.zero(p)
        # normalize into signed terms
        text = text.replace("-", "+-")
        coeffs: dict[int, int] = {}
        for term in text.split("+"):
            if not term:
                continue
            sign = 1
            if term.startswith("-"):
                sign = -1
                term = term[1:]
            m = _TERM_RE.match(term)
            if m:
                c = int(m.group(1)) if m.group(1) else 1
                k = int(m.group(2)) if m.group(2) else 1
            elif term.isdigit():
                c, k = int(term), 0
            else:
                raise ValueError(f"cannot parse term {term!r}")
            coeffs[k] = coeffs.get(k, 0) + sign * c
        out = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c % p
        return cls(p, out)

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                parts.append(f"{coef}t" if k == 1 else f"{coef}t^{k}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"PrimePoly({self.p}, {self})"

    def to_coeff_string(self) -> str:
        return f"p:{self.p};coeffs:{','.join(str(c) for c in self.coeffs)}"

    # -- ring arithmetic ---------------------------------------------------

    def _check(self, other: "PrimePoly"):
        if self.p != other.p:
            raise ValueError(f"mixed characteristics {self.p} and {other.p}")

    def __add__(self, other: "PrimePoly") -> "PrimePoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return PrimePoly(self.p, out)

    def __neg__(self) -> "PrimePoly":
        return PrimePoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: "PrimePoly") -> "PrimePoly":
        return self + (-other)

    def __mul__(self, other) -> "PrimePoly":
        if isinstance(other, int):
            return PrimePoly(self.p, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PrimePoly.zero(self.p)
        a, b, p = self.coeffs, other.coeffs, self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PrimePoly(p, [c % p for c in out])

    __rmul__ = __mul__

    def __divmod__(self, other: "PrimePoly"):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return PrimePoly.zero(p), self
        inv_lead = pow(other.coeffs[-1], -1, p)
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead % p
            if c:
                quo[k] = c
                for i, oc in enumerate(other.coeffs):
                    rem[k + i] = (rem[k + i] - c * oc) % p
        return PrimePoly(p, quo), PrimePoly(p, rem[: other.degree])

    def __floordiv__(self, other: "PrimePoly") -> "PrimePoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "PrimePoly") -> "PrimePoly":
        return divmod(self, other)[1]

    def monic(self) -> "PrimePoly":
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return self * inv

    def eval(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % self.p
        return acc

    def derivative(self) -> "PrimePoly":
        return PrimePoly(self.p, [k * c for k, c in enumerate(self.coeffs)][1:])

    def pow_mod(self, e: int, mod: "PrimePoly") -> "PrimePoly":
        """self**e reduced mod ``mod``; e may be arbitrarily large."""
        if e < 0:
            raise ValueError("negative exponent")
        result = PrimePoly.one(self.p) % mod
        base = self % mod
        while e:
            if e & 1:
                result = result * base % mod
            base = base * base % mod
            e >>= 1
        return result


def gcd(a: PrimePoly, b: PrimePoly) -> PrimePoly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def xgcd(a: PrimePoly, b: PrimePoly):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = PrimePoly.one(p), PrimePoly.zero(p)
    t0, t1 = PrimePoly.zero(p), PrimePoly.one(p)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = pow(r0.coeffs[-1], -1, p)
    return r0 * inv, s0 * inv, t0 * inv


def is_irreducible(f: PrimePoly) -> bool:
    """Rabin's irreducibility test over F_p."""
    n = f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    p = f.p
    fm = f.monic()
    x = PrimePoly.x(p)
    if x.pow_mod(p**n, fm) != x % fm:
        return False
    for r in _prime_divisors(n):
        h = x.pow_mod(p ** (n // r), fm) - x
        if gcd(fm, h).degree > 0:
            return False
    return True


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_DEFAULT_MODULUS_CACHE: dict[tuple[int, int], PrimePoly] = {}


def default_modulus(p: int, n: int) -> PrimePoly:
    """Lexicographically smallest monic irreducible of degree n over F_p.

    Coefficient tuples (c_0, ..., c_{n-1}) are compared low degree
    first.  The constant term must be nonzero for n >= 2, so that block
    of candidates is skipped wholesale rather than enumerated.
    """
    key = (p, n)
    cached = _DEFAULT_MODULUS_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 1:
        found = PrimePoly.x(p)  # t itself: smallest monic linear
    else:
        found = None
        for c0 in range(1, p):
            for rest in _count_vectors(p, n - 1):
                f = PrimePoly(p, (c0,) + rest + (1,))
                if is_irreducible(f):
                    found = f
                    break
            if found is not None:
                break
        if found is None:  # not reachable: irreducibles exist in every degree
            raise RuntimeError(f"no irreducible of degree {n} over F_{p}")
    _DEFAULT_MODULUS_CACHE[key] = found
    return found


def _count_vectors(p: int, length: int):
    """Yield tuples in increasing lexicographic order, first entry most
    significant (so the last coordinate varies fastest)."""
    if length == 0:
        yield ()
        return
    v = [0] * length
    while True:
        yield tuple(v)
        i = length - 1
        while i >= 0 and v[i] == p - 1:
            v[i] = 0
            i -= 1
        if i < 0:
            return
        v[i] += 1


# -- factorization over F_p ---------------------------------------------


def squarefree_decomposition(f: PrimePoly) -> list[tuple[PrimePoly, int]]:
    """Write monic f as a product of squarefree parts with multiplicities.

    Returns [(g_i, m_i)] with f = prod g_i^{m_i}, the g_i squarefree and
    pairwise coprime.  Handles the characteristic-p collapse f = h(t^p).
    """
    p = f.p
    f = f.monic()
    out: list[tuple[PrimePoly, int]] = []
    if f.degree == 0:
        return out

    def p_th_root(g: PrimePoly) -> PrimePoly:
        # g has only exponents divisible by p; coefficients in F_p are
        # their own p-th roots
        return PrimePoly(p, g.coeffs[::p])

    def recurse(g: PrimePoly, mult: int):
        if g.degree <= 0:
            return
        d = g.derivative()
        if d.is_zero():
            recurse(p_th_root(g), mult * p)
            return
        w = gcd(g, d)
        v = g // w  # product of squarefree factors not killed by d/dt
        k = 1
        while v.degree > 0:
            h = gcd(v, w)
            piece = v // h
            if piece.degree > 0:
                out.append((piece, mult * k))
            v = h
            w = w // h
            k += 1
        if w.degree > 0:
            recurse(p_th_root(w), mult * p)

    recurse(f, 1)
    return out


def distinct_degree_split(f: PrimePoly) -> list[tuple[PrimePoly, int]]:
    """Split squarefree monic f into [(product of irreducibles of degree d, d)]."""
    p = f.p
    out = []
    x = PrimePoly.x(p)
    h = x % f
    rest = f
    d = 0
    while rest.degree > 0:
        d += 1
        if 2 * d > rest.degree:
            out.append((rest, rest.degree))
            break
        h = h.pow_mod(p, rest)
        g = gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    return out


def equal_degree_split(f: PrimePoly, d: int, rng: Random | None = None) -> list[PrimePoly]:
    """Split monic squarefree f, all of whose irreducible factors have
    degree d, into those factors (Cantor-Zassenhaus).

    The splitting elements come from a seeded generator, so the call is
    deterministic; the returned list is sorted by coefficient tuple.
    """
    p = f.p
    if rng is None:
        rng = Random(0xA590)
    if f.degree == d:
        return [f]
    pieces = [f]
    done: list[PrimePoly] = []
    while pieces:
        g = pieces.pop()
        if g.degree == d:
            done.append(g)
            continue
        u = PrimePoly(p, [rng.randrange(p) for _ in range(g.degree)])
        if u.degree < 1:
            continue
        if p == 2:
            # trace map into F_2: u + u^2 + ... + u^(2^(d-1))
            w = u % g
            acc = w
            for _ in range(d - 1):
                w = w * w % g
                acc = acc + w
            h = gcd(g, acc)
        else:
            w = u.pow_mod((p**d - 1) // 2, g)
            h = gcd(g, w - PrimePoly.one(p))
        if 0 < h.degree < g.degree:
            pieces.append(h)
            pieces.append(g // h)
        else:
            pieces.append(g)
    return sorted(done, key=lambda q: q.coeffs)


def factor(f: PrimePoly) -> list[tuple[PrimePoly, int]]:
    """Full factorization into monic irreducibles over F_p.

    Returns (factor, multiplicity) pairs sorted by degree then
    coefficients; the product with multiplicities equals f up to its
    leading unit.  Pipeline: squarefree decomposition, then
    distinct-degree, then seeded equal-degree splitting.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = Random(0xA590)
    out: list[tuple[PrimePoly, int]] = []
    for squarefree, mult in squarefree_decomposition(f):
        for bucket, d in distinct_degree_split(squarefree):
            for irr in equal_degree_split(bucket, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda pair: (pair[0].degree, pair[0].coeffs))
    return out
