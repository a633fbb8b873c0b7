"""Locally ordered ranges of F_p and the amplitude region they support.

When 1, 2, ..., k-1 are all quadratic residues mod p (k the least
non-residue), any window of k consecutive elements is transitively
ordered by "b > a iff b - a is a residue".  Amplitudes a + bi with both
parts in the window centered at 0, and with ``d * (a*a + b*b) <= (k-1)/2``,
keep <Psi|Psi> inside that window, so the inner product behaves like an
ordinary one there.

Region checks run on centered integer lifts; the inequality is a statement
about integers and must not be evaluated mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .gfield import FieldCtx, center, make_field
from .linalg import StateVector, herm_dot
from .numtheory import a000229_resolve, is_prime, least_qnr, legendre_symbol

__all__ = [
    "OrderedRange",
    "AmplitudeRegion",
    "RegionReport",
    "ordered_range",
    "qr_less",
    "check_transitive",
    "allowed_amplitudes",
    "in_region",
    "region_vectors",
    "centered_norm",
]


@dataclass(frozen=True)
class OrderedRange:
    p: int
    k: int

    @property
    def half(self) -> int:
        """Largest |a| in S_0(k); for k = 2 the window is {0, 1}."""
        return (self.k - 1) // 2

    def window(self, x: int = 0) -> list[int]:
        """S_x(k) as signed integers, ascending."""
        if self.k == 2:
            return [x, x + 1]
        return list(range(x - self.half, x + self.half + 1))

    def extended_window(self, x: int = 0) -> list[int]:
        """S_x(k) plus the next element above: k + 1 elements, never ordered."""
        w = self.window(x)
        return w + [w[-1] + 1]

    def ctx(self) -> FieldCtx:
        return make_field(self.p)

    @classmethod
    def for_k(cls, k: int, **search) -> "OrderedRange":
        """Range of the least prime whose least non-residue is k."""
        if not is_prime(k):
            raise ValueError(f"k must be prime, got {k}")
        p = a000229_resolve(k, **search)
        if p is None:
            raise LookupError(f"no prime with least non-residue {k} inside the search budget")
        return cls(p, k)


def ordered_range(p: int) -> OrderedRange:
    return OrderedRange(p, least_qnr(p).k)


def qr_less(a: int, b: int, r: OrderedRange) -> str:
    """Compare residues a and b in the local order.

    'less' when b - a is a residue reachable inside the run 1..k-1,
    'greater' symmetrically, 'equal' when a = b, otherwise 'incomparable'
    (the order is only local, and far-apart elements are not related).
    """
    p = r.p
    d = (b - a) % p
    if d == 0:
        return "equal"
    if d < r.k and legendre_symbol(d, p) == 1:
        return "less"
    if p - d < r.k and legendre_symbol(p - d, p) == 1:
        return "greater"
    return "incomparable"


def check_transitive(seq, r: OrderedRange) -> bool:
    """True iff every forward difference seq[j] - seq[i] (i < j) is a non-zero residue."""
    vals = list(seq)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if legendre_symbol(vals[j] - vals[i], r.p) != 1:
                return False
    return True


@dataclass(frozen=True)
class AmplitudeRegion:
    d: int
    range: OrderedRange

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be positive")
        # d < p - (k-1)/2, kept in integers
        if 2 * self.d >= 2 * self.range.p - (self.range.k - 1):
            raise ValueError(f"dimension {self.d} too large for p={self.range.p}, k={self.range.k}")

    def admits(self, a: int, b: int) -> bool:
        half = self.range.half
        if self.range.k == 2:
            inside = a in (0, 1) and b in (0, 1)
        else:
            inside = -half <= a <= half and -half <= b <= half
        # d (a^2 + b^2) <= (k-1)/2, doubled to stay integral for even k
        return inside and 2 * self.d * (a * a + b * b) <= self.range.k - 1


def allowed_amplitudes(region: AmplitudeRegion) -> frozenset[tuple[int, int]]:
    """F^d(k) as centered (re, im) pairs."""
    w = region.range.window(0)
    return frozenset((a, b) for a in w for b in w if region.admits(a, b))


@dataclass(frozen=True)
class RegionReport:
    ok: bool
    index: int | None = None
    amplitude: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def in_region(psi: StateVector, region: AmplitudeRegion) -> RegionReport:
    """Check every amplitude of psi against the region; report the first offender."""
    if psi.dim != region.d:
        raise ValueError(f"state has dim {psi.dim}, region expects {region.d}")
    for i, (a, b) in enumerate(psi.lifts()):
        if not region.admits(a, b):
            return RegionReport(False, i, (a, b))
    return RegionReport(True)


def region_vectors(region: AmplitudeRegion, ctx: FieldCtx):
    """Every vector of the region over ``ctx`` (exhaustive; small d only)."""
    amps = sorted(allowed_amplitudes(region))
    for combo in product(amps, repeat=region.d):
        yield StateVector.of(ctx, combo)


def centered_norm(psi: StateVector) -> int:
    """Centered lift of <psi|psi> (its real part; the imaginary part is 0)."""
    n = herm_dot(psi, psi)
    return center(n.re, psi.ctx.p)
