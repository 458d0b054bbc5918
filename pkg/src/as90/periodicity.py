"""Periodic structure of partial-trace sequences.

For z with trace one over the base subfield, the running partial sums
x_i = z + sigma(z) + ... + sigma^{i-1}(z) repeat with period exactly
p*e, where e is the degree of z over the base and p the characteristic.
This module measures periods of stored sequences and checks the whole
statement (period, divisibility by the p-part, nonvanishing between
wrap-arounds) on live field data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoPeriodWithinBound, TraceNotOne
from .fields import FieldCtx, FieldElem, degree_over_subfield, frobenius, trace
from .intfactor import p_part


@dataclass
class PartialTraceSeq:
    """A stored prefix of the sequence x_i = sum_{j<i} sigma^j(z)."""

    terms: list
    p: int
    e: int
    period: int | None
    z_ref: FieldElem | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]


@dataclass
class PeriodReport:
    """Outcome of checking the period statement for one witness."""

    e: int
    n_p: int
    period: int
    expected_period: int
    interior_nonzero: bool
    passed: bool

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "n_p": self.n_p,
            "period": self.period,
            "expected_period": self.expected_period,
            "interior_nonzero": self.interior_nonzero,
            "pass": self.passed,
        }


def _is_period(seq, d: int) -> bool:
    return all(seq[i] == seq[i + d] for i in range(len(seq) - d))


def _divisors(b: int) -> list[int]:
    out = [d for d in range(1, b + 1) if b % d == 0]
    return out


def sequence_period(seq, bound: int) -> int:
    """Minimal d <= bound with seq[i] == seq[i+d] for all stored i.

    Needs at least 2*bound stored terms so minimality is decidable.
    Divisors of the bound are tried first: whenever the bound itself is
    a period (the situation the period statement guarantees), the
    minimal period divides it and the divisor scan already answers.
    The linear fallback covers sequences with no such guarantee.
    """
    if bound < 1:
        raise ValueError("period bound must be positive")
    if len(seq) < 2 * bound:
        raise ValueError(
            f"need at least {2 * bound} terms to certify a period bound of {bound}"
        )
    for d in _divisors(bound):
        if _is_period(seq, d):
            return d
    for d in range(2, bound):
        if bound % d != 0 and _is_period(seq, d):
            return d
    raise NoPeriodWithinBound(f"no period at or below {bound}")


def partial_trace_terms(z: FieldElem, length: int, k: int = 1) -> list[FieldElem]:
    """First ``length`` partial sums of the conjugates of z, x_0 = 0."""
    ctx = z.ctx
    terms = [ctx.zero()]
    w = z
    for _ in range(length - 1):
        terms.append(terms[-1] + w)
        w = frobenius(w, k)
    return terms


def verify_period_theorem(z: FieldElem, ctx: FieldCtx | None = None) -> PeriodReport:
    """Measure the period of the partial-trace sequence of z and compare
    with the predicted value p*e.

    Requires trace(z) = 1 over the designated subfield.  The report
    records e = deg(z) over that subfield, the p-part of the extension
    degree (which must divide e), the measured period, and whether all
    interior terms x_l (0 < l < p*e) are nonzero.
    """
    if ctx is None:
        ctx = z.ctx
    if trace(z, ctx.f) != 1:
        raise TraceNotOne("the partial-trace period statement needs trace(z) = 1")
    p = ctx.p
    e = degree_over_subfield(z, ctx.f)
    n_p = p_part(ctx.m, p)
    expected = p * e
    terms = partial_trace_terms(z, 2 * expected)
    period = sequence_period(terms, expected)
    interior = all(not terms[l].is_zero() for l in range(1, expected))
    passed = period == expected and e % n_p == 0 and interior
    return PeriodReport(
        e=e,
        n_p=n_p,
        period=period,
        expected_period=expected,
        interior_nonzero=interior,
        passed=passed,
    )
