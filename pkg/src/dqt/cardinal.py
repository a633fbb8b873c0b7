"""Cardinal probability.

A set of states with different integer norms m cannot in general be
rescaled by integers to one common norm (2 x1^2 = 3 x2^2 has no solution),
so each state gets an integer weight x_m chosen from approximate square
roots, giving scale labels mu_m = m * x_m^2 that are only approximately
equal.  The scaled probabilities x_m^2 |alpha_i|^2 are then compared as
integers.  A realization is acceptable when it never reverses a strict
inequality between the exact probabilities |alpha_i|^2 / m.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import RangeOverflowError, RegionViolation
from .gfield import FieldCtx, make_field
from .linalg import StateVector
from .numtheory import ceil_sqrt, next_prime
from .ordered import AmplitudeRegion, in_region

__all__ = [
    "ApproxSqrt",
    "ScaledState",
    "CardinalRealization",
    "ValidationReport",
    "approx_sqrt",
    "integer_norm",
    "squarefree_split",
    "rescale_states",
    "scaled_probabilities",
    "reference_probabilities",
    "realize",
    "validate_realization",
    "common_norm_solutions",
    "representative_state",
    "EXAMPLE_FIELD",
]

# p = 311 has least non-residue 11: the field of the one-qubit examples
EXAMPLE_FIELD: FieldCtx = make_field(311)

_REPRESENTATIVES = {
    1: ("1", "0"),
    2: ("1", "1"),
    3: ("1", "1+i"),
    4: ("1-i", "1+i"),
}


def _required_k(value: int) -> int:
    # least prime k with value <= (k-1)/2
    return next_prime(2 * value + 1)


@dataclass(frozen=True)
class ApproxSqrt:
    m: int
    t: int
    s: int

    @property
    def radicand(self) -> int:
        return self.m * 100**self.t


def approx_sqrt(m: int, t: int = 0, k: int | None = None) -> ApproxSqrt:
    """Least s with s^2 >= m * 100^t (t extra decimal digits).

    When ``k`` is given, s^2 must fit in the ordered range (k-1)/2;
    otherwise RangeOverflowError names the k that would be needed.
    """
    if m < 1:
        raise ValueError("approx_sqrt needs m >= 1")
    if t < 0:
        raise ValueError("precision must be non-negative")
    s = ceil_sqrt(m * 100**t)
    if k is not None and 2 * s * s > k - 1:
        need = _required_k(s * s)
        raise RangeOverflowError(
            f"sqrt'({m * 100**t}) = {s} needs {s * s} in the ordered range; k={k} is too small (need k >= {need})",
            required_k=need,
        )
    return ApproxSqrt(m, t, s)


def integer_norm(psi: StateVector) -> int:
    """<psi|psi> over the integers, from centered lifts (no wrap-around)."""
    return sum(a * a + b * b for a, b in psi.lifts())


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n = c^2 * r with r squarefree; returns (c, r)."""
    if n < 1:
        raise ValueError("squarefree_split needs n >= 1")
    c, r = 1, n
    f = 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            c *= f
        f += 1
    return c, r


@dataclass(frozen=True)
class ScaledState:
    base: StateVector
    weight: int
    mu: int = field(init=False)

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("weights are positive integers")
        object.__setattr__(self, "mu", self.m * self.weight**2)

    @property
    def m(self) -> int:
        return integer_norm(self.base)


def rescale_states(
    states: Sequence[StateVector],
    target: int | None = None,
    t: int = 0,
    k: int | None = None,
) -> list[ScaledState]:
    """Integer weights bringing each state's norm close to ``target``.

    For norm m, target/m = c^2 r with r squarefree and the weight is
    c * sqrt'(r) at precision t (c * 10^t when r = 1).  The square factor
    is pulled out before approximating, so 24/1 gives 2*sqrt'(6) = 6
    rather than sqrt'(24) = 5.  ``target`` defaults to lcm of the norms.
    """
    norms = [integer_norm(s) for s in states]
    if any(m == 0 for m in norms):
        raise ValueError("cannot rescale the zero vector")
    if target is None:
        target = math.lcm(*norms)
    out = []
    for psi, m in zip(states, norms):
        if target % m:
            raise ValueError(f"target {target} is not a multiple of norm {m}")
        c, r = squarefree_split(target // m)
        root = approx_sqrt(r, t, k).s if r > 1 else 10**t
        out.append(ScaledState(psi, c * root))
    return out


def scaled_probabilities(s: ScaledState, region: AmplitudeRegion | None = None) -> list[int]:
    """x^2 |alpha_i|^2 per basis outcome; sums to mu."""
    if region is not None:
        report = in_region(s.base, region)
        if not report:
            raise RegionViolation(f"amplitude {report.amplitude} at index {report.index} is outside the region")
    w2 = s.weight**2
    return [w2 * (a * a + b * b) for a, b in s.base.lifts()]


def reference_probabilities(states: Sequence[StateVector]) -> list[list[Fraction]]:
    """Exact |alpha_i|^2 / m for each state."""
    out = []
    for psi in states:
        m = integer_norm(psi)
        out.append([Fraction(a * a + b * b, m) for a, b in psi.lifts()])
    return out


@dataclass(frozen=True)
class CardinalRealization:
    probs: tuple[tuple[int, ...], ...]
    scales: tuple[int, ...]

    def __post_init__(self):
        if len(self.probs) != len(self.scales):
            raise ValueError("one scale per state")
        for row, mu in zip(self.probs, self.scales):
            if any(v < 0 or v > mu for v in row):
                raise ValueError("scaled probabilities must lie in [0, mu]")

    def outcome(self, i: int) -> tuple[int, ...]:
        """P-bar(i): the i-th scaled probability of every state."""
        return tuple(row[i] for row in self.probs)


def realize(scaled: Sequence[ScaledState]) -> CardinalRealization:
    return CardinalRealization(
        tuple(tuple(scaled_probabilities(s)) for s in scaled),
        tuple(s.mu for s in scaled),
    )


Entry = tuple[int, int]  # (state index, outcome index)


@dataclass
class ValidationReport:
    preserved: list[tuple[Entry, Entry]] = field(default_factory=list)
    collapsed: list[tuple[Entry, Entry]] = field(default_factory=list)
    reversed: list[tuple[Entry, Entry]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.reversed

    @property
    def strict(self) -> bool:
        return not self.reversed and not self.collapsed

    def verdict(self) -> str:
        if self.strict:
            return "strict"
        return "valid" if self.valid else "invalid"


def validate_realization(
    real: CardinalRealization, reference: Sequence[Sequence[Fraction]]
) -> ValidationReport:
    """Check every strict reference inequality against the scaled integers.

    Pairs are ordered so the first entry has the smaller reference
    probability.  Reference ties are unconstrained: a realization may
    split them either way.
    """
    if len(reference) != len(real.probs) or any(
        len(r) != len(p) for r, p in zip(reference, real.probs)
    ):
        raise ValueError("realization and reference index sets differ")
    entries = [(m, i) for m, row in enumerate(reference) for i in range(len(row))]
    report = ValidationReport()
    for x, y in product(entries, repeat=2):
        rx, ry = Fraction(reference[x[0]][x[1]]), Fraction(reference[y[0]][y[1]])
        if not rx < ry:
            continue
        px, py = real.probs[x[0]][x[1]], real.probs[y[0]][y[1]]
        if px < py:
            report.preserved.append((x, y))
        elif px == py:
            report.collapsed.append((x, y))
        else:
            report.reversed.append((x, y))
    return report


def common_norm_solutions(m1: int, m2: int, bound: int) -> list[tuple[int, int]]:
    """All 1 <= x1 <= bound with m1 x1^2 = m2 x2^2 for some 1 <= x2 <= bound."""
    hits = []
    for x1 in range(1, bound + 1):
        num = m1 * x1 * x1
        if num % m2:
            continue
        sq = num // m2
        x2 = math.isqrt(sq)
        if x2 * x2 == sq and 1 <= x2 <= bound:
            hits.append((x1, x2))
    return hits


def representative_state(m: int, ctx: FieldCtx = EXAMPLE_FIELD) -> StateVector:
    """A one-qubit state with integer norm m.

    Norms 1..4 use the fixed states (1), (1, 1), (1, 1+i), (1-i, 1+i);
    other m take the decomposition a^2+b^2+c^2+d^2 = m with the largest
    leading parts (descending search) as
    (a+bi, c+di).
    """
    if m < 1:
        raise ValueError("norm must be positive")
    if m in _REPRESENTATIVES:
        return StateVector.of(ctx, _REPRESENTATIVES[m])
    r = math.isqrt(m)
    for a, b, c, d in product(range(r, -1, -1), repeat=4):
        if a * a + b * b + c * c + d * d == m:
            return StateVector.of(ctx, [(a, b), (c, d)])
    raise AssertionError("four-square decomposition not found")  # pragma: no cover
