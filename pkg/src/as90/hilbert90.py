"""Additive Hilbert 90 made explicit.

Given the cyclic extension E/F cut out by a field context (F = GF(q),
sigma: x -> x^q), any y with trace zero is a sigma-difference:
y = sigma(x) - x.  The solution is written down directly from a
trace-one witness z as

    x = R(y, z) = sum_i ( sum_{j<i} sigma^j(z) ) * sigma^i(y),

with the partial sums of z acting as coefficients.  This module finds
witnesses, evaluates R, and packages verified (y, z, x) certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .errors import (
    CtxMismatch,
    NoSuchDegree,
    RandomRetriesExhausted,
    TraceNotOne,
    TraceNotZero,
)
from .fields import (
    FieldCtx,
    FieldElem,
    degree_over_subfield,
    frobenius,
    make_ctx,
    subfield_embed,
    trace,
)
from .intfactor import p_part
from .periodicity import PartialTraceSeq, partial_trace_terms, sequence_period

__all__ = [
    "TraceOneWitness",
    "RootCertificate",
    "p_part",
    "find_trace_one",
    "partial_trace_sequence",
    "r_form",
    "r_symmetry_defect",
]


@dataclass
class TraceOneWitness:
    """An element z of E with trace 1 over F and deg_F(z) = e."""

    z: FieldElem
    e: int
    provenance: str


@dataclass
class RootCertificate:
    """A checked solution of sigma^k(x) - x = y built from witness z."""

    y: FieldElem
    z: FieldElem
    x: FieldElem
    k: int = 1
    checked: bool = False

    def serialize(self) -> str:
        ctx = self.y.ctx
        return (
            f"field={ctx.describe()} y={self.y} z={self.z} x={self.x} "
            f"k={self.k} verified={'true' if self.checked else 'false'}"
        )

    def to_dict(self) -> dict:
        ctx = self.y.ctx
        return {
            "field": ctx.describe(),
            "y": str(self.y),
            "z": str(self.z),
            "x": str(self.x),
            "k": self.k,
            "verified": self.checked,
        }


def _check_generator(ctx: FieldCtx, k: int):
    if math.gcd(k, ctx.m) != 1:
        raise ValueError(f"sigma^{k} does not generate the Galois group of order {ctx.m}")


def find_trace_one(
    ctx: FieldCtx,
    target_e: int | None = None,
    seed: int = 0,
    randomize: bool = False,
) -> TraceOneWitness:
    """Produce z in E with trace 1 over F and deg_F(z) = target_e.

    target_e defaults to n_p, the p-part of the extension degree, which
    is the smallest degree any trace-one witness can have.  For the
    default degree a deterministic scan of the fixed field K of
    sigma^{n_p} is used, looking for trace (n_p')^{-1} onto F.  Larger
    degrees (multiples of n_p dividing the extension degree) use seeded
    rejection sampling: draw zeta in the degree-target subfield, reject
    on wrong degree or vanishing trace, return zeta scaled by its
    inverse trace.
    """
    p, m = ctx.p, ctx.m
    m_p = p_part(m, p)
    m_rest = m // m_p
    target = m_p if target_e is None else target_e
    if target < 1 or target % m_p != 0 or m % target != 0:
        raise NoSuchDegree(
            f"witness degrees over the base are the multiples of {m_p} dividing {m}; "
            f"got {target}"
        )
    if target == m_p and not randomize:
        inv = pow(m_rest % p, -1, p)
        if m_p == 1:
            z = ctx.elem(inv)
        else:
            sub = ctx if ctx.f * m_p == ctx.n else make_ctx(p, ctx.f * m_p, f=ctx.f)
            want = sub.elem(inv)
            z0 = None
            for cand in sub.elements_lex():
                if trace(cand, sub.f) == want and degree_over_subfield(cand, sub.f) == m_p:
                    z0 = cand
                    break
            assert z0 is not None, "every field carries trace-one witnesses"
            z = z0 if sub is ctx else subfield_embed(z0, ctx)
        provenance = "deterministic-subfield"
    else:
        rng = Random(seed)
        sub = ctx if ctx.f * target == ctx.n else make_ctx(p, ctx.f * target, f=ctx.f)
        scale = (m // target) % p
        z0 = None
        for _ in range(64):
            zeta = sub.random_element(rng)
            if zeta.is_zero():
                continue
            if degree_over_subfield(zeta, sub.f) != target:
                continue
            tau = trace(zeta, sub.f) * scale
            if tau.is_zero():
                continue
            z0 = zeta / tau
            break
        if z0 is None:
            raise RandomRetriesExhausted(
                f"no usable witness after 64 draws (seed {seed})"
            )
        z = z0 if sub is ctx else subfield_embed(z0, ctx)
        provenance = f"random-scaled(seed={seed})"
    assert trace(z, ctx.f) == 1
    return TraceOneWitness(z=z, e=target, provenance=provenance)


def partial_trace_sequence(
    z: FieldElem,
    ctx: FieldCtx | None = None,
    length: int | None = None,
    k: int = 1,
) -> PartialTraceSeq:
    """Partial sums x_i = sum_{j<i} sigma^{jk}(z), packaged with their
    measured period when enough terms are stored (2*p*e suffices)."""
    if ctx is None:
        ctx = z.ctx
    elif z.ctx != ctx:
        raise CtxMismatch("z does not live in the given context")
    _check_generator(ctx, k)
    e = degree_over_subfield(z, ctx.f)
    bound = ctx.p * e
    if length is None:
        length = 2 * bound
    if length < 1:
        raise ValueError("need at least one term")
    terms = partial_trace_terms(z, length, k)
    period = sequence_period(terms, bound) if length >= 2 * bound else None
    return PartialTraceSeq(terms=terms, p=ctx.p, e=e, period=period, z_ref=z)


def _r_raw(a: FieldElem, b: FieldElem, k: int = 1) -> FieldElem:
    """R(a, b) = sum_i (sum_{j<i} sigma^{jk} b) sigma^{ik} a, no checks."""
    ctx = a.ctx
    acc = ctx.zero()
    partial = ctx.zero()
    aw, bw = a, b
    for _ in range(ctx.m):
        acc = acc + partial * aw
        partial = partial + bw
        aw = frobenius(aw, k)
        bw = frobenius(bw, k)
    return acc


def r_form(y: FieldElem, z: FieldElem, ctx: FieldCtx | None = None, k: int = 1) -> RootCertificate:
    """Solve sigma^k(x) - x = y explicitly using the witness z.

    Preconditions: trace(y) = 0 and trace(z) = 1 over the designated
    subfield.  The returned certificate has been re-verified, so
    ``checked`` is only ever True.
    """
    if ctx is None:
        ctx = y.ctx
    elif y.ctx != ctx:
        raise CtxMismatch("y does not live in the given context")
    if z.ctx != ctx:
        raise CtxMismatch("y and z live in different contexts")
    _check_generator(ctx, k)
    if not trace(y, ctx.f).is_zero():
        raise TraceNotZero("y has nonzero trace, so it is not a sigma-difference")
    if trace(z, ctx.f) != 1:
        raise TraceNotOne("witness z must have trace 1")
    x = _r_raw(y, z, k)
    if frobenius(x, k) - x != y:
        raise RuntimeError("cocycle identity failed; arithmetic is broken")
    return RootCertificate(y=y, z=z, x=x, k=k, checked=True)


def r_symmetry_defect(y: FieldElem, z: FieldElem, ctx: FieldCtx | None = None, k: int = 1) -> FieldElem:
    """R(y,z) + R(z,y) + trace(y*z), which the antisymmetry law makes 0.

    Both cocycle orientations are re-checked along the way:
    sigma R(y,z) - R(y,z) = y and R(z,y) - sigma R(z,y) = y.
    """
    if ctx is None:
        ctx = y.ctx
    if y.ctx != ctx or z.ctx != ctx:
        raise CtxMismatch("y and z must share the context")
    _check_generator(ctx, k)
    if not trace(y, ctx.f).is_zero():
        raise TraceNotZero("antisymmetry is stated for trace-zero y")
    if trace(z, ctx.f) != 1:
        raise TraceNotOne("witness z must have trace 1")
    ryz = _r_raw(y, z, k)
    rzy = _r_raw(z, y, k)
    if frobenius(ryz, k) - ryz != y:
        raise RuntimeError("forward cocycle identity failed")
    if rzy - frobenius(rzy, k) != y:
        raise RuntimeError("reversed cocycle identity failed")
    return ryz + rzy + trace(y * z, ctx.f)
