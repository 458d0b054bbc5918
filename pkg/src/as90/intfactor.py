"""Integer factorization sized for group orders up to 2^64.

Trial division up to 10^6 strips small primes; anything left is handled
by a deterministic Miller-Rabin test plus Brent's cycle variant of
Pollard rho.  Inputs beyond the ceiling (default 2^64, overridable via
the AS90_FACTOR_BOUND environment variable) are refused rather than
attempted.
"""

from __future__ import annotations

import math
import os

from .errors import FactorizationTooHard
from .polys import is_prime

_TRIAL_LIMIT = 10**6
DEFAULT_FACTOR_BOUND = 2**64


def factor_bound() -> int:
    raw = os.environ.get("AS90_FACTOR_BOUND")
    return int(raw) if raw else DEFAULT_FACTOR_BOUND


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n (n_p in multiplicative notation)."""
    if n < 1:
        raise ValueError("p_part needs a positive integer")
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def _pollard_rho(m: int) -> int:
    """A nontrivial factor of composite odd m."""
    if m % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % m
            y = (y * y + c) % m
            y = (y * y + c) % m
            d = math.gcd(abs(x - y), m)
        if d != m:
            return d
    raise FactorizationTooHard(f"pollard rho gave up on {m}")


def factorint(m: int) -> dict[int, int]:
    """Prime factorization of m >= 1 as {prime: exponent}."""
    if m < 1:
        raise ValueError("factorint needs a positive integer")
    bound = factor_bound()
    if m > bound:
        raise FactorizationTooHard(
            f"{m} exceeds the factorization ceiling {bound}"
        )
    out: dict[int, int] = {}
    d = 2
    while d <= _TRIAL_LIMIT and d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    stack = [m] if m > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            out[v] = out.get(v, 0) + 1
            continue
        f = _pollard_rho(v)
        stack.append(f)
        stack.append(v // f)
    return out
