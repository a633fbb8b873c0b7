"""Arithmetic in F_p and in the complexified field F_{p^2} = F_p(i).

``F_{p^2}`` exists as ``F_p(i)`` exactly when ``p % 4 == 3``; then x^2 + 1
has no root in F_p and the Frobenius map x -> x^p acts as complex
conjugation.  Elements keep canonical residues 0..p-1; signed (centered)
integers only appear through :func:`center_lift`.

A non-complexifiable context (p = 2 or p = 1 mod 4) yields
:class:`PrimeElem` scalars with a trivial conjugation.  This is what the
modal theory over F_2 uses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .numtheory import is_prime

__all__ = [
    "FieldCtx",
    "GaussianElem",
    "PrimeElem",
    "make_field",
    "gf_arith",
    "conj",
    "norm_sq",
    "gf_inv",
    "center_lift",
    "center",
    "format_elem",
    "parse_elem",
    "format_pair",
    "parse_pair",
]


@dataclass(frozen=True)
class FieldCtx:
    p: int
    complexifiable: bool

    @property
    def q(self) -> int:
        """Order of the working field: p*p when complexified, else p."""
        return self.p * self.p if self.complexifiable else self.p

    def elem(self, re: int = 0, im: int = 0) -> "Scalar":
        if self.complexifiable:
            return GaussianElem(re % self.p, im % self.p, self)
        if im % self.p:
            raise ValueError(f"F_{self.p} is not complexifiable; imaginary part must vanish")
        return PrimeElem(re % self.p, self)

    @property
    def zero(self) -> "Scalar":
        return self.elem(0)

    @property
    def one(self) -> "Scalar":
        return self.elem(1)

    def coerce(self, value) -> "Scalar":
        """Accept ints, (re, im) pairs, element strings or elements of this field."""
        if isinstance(value, (GaussianElem, PrimeElem)):
            if value.ctx != self:
                raise ValueError(f"element of F_{value.ctx.p} used in F_{self.p}")
            return value
        if isinstance(value, bool):
            return self.elem(int(value))
        if isinstance(value, int):
            return self.elem(value)
        if isinstance(value, tuple) and len(value) == 2:
            return self.elem(int(value[0]), int(value[1]))
        if isinstance(value, str):
            return parse_elem(value, self)
        raise TypeError(f"cannot interpret {value!r} as an element of F_{self.p}")

    def elements(self):
        """Every element of the field, in (re, im) lexicographic order."""
        if self.complexifiable:
            for a in range(self.p):
                for b in range(self.p):
                    yield GaussianElem(a, b, self)
        else:
            for a in range(self.p):
                yield PrimeElem(a, self)

    def __str__(self) -> str:
        return f"F_{self.p}^2" if self.complexifiable else f"F_{self.p}"


def make_field(p: int) -> FieldCtx:
    if not is_prime(p):
        raise ValueError(f"field characteristic must be prime, got {p}")
    return FieldCtx(p, p % 4 == 3)


def _same_ctx(x, y) -> None:
    if x.ctx != y.ctx:
        raise ValueError(f"mixed fields: {x.ctx} and {y.ctx}")


@dataclass(frozen=True)
class GaussianElem:
    """a + b i in F_{p^2} with i*i = -1."""

    re: int
    im: int
    ctx: FieldCtx

    def __post_init__(self):
        if not self.ctx.complexifiable:
            raise ValueError(f"{self.ctx} has no complex extension")
        if not (0 <= self.re < self.ctx.p and 0 <= self.im < self.ctx.p):
            raise ValueError("residues must be canonical")

    def _wrap(self, other) -> "GaussianElem":
        if isinstance(other, GaussianElem):
            _same_ctx(self, other)
            return other
        if isinstance(other, int):
            return self.ctx.elem(other)
        return NotImplemented

    def __add__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        p = self.ctx.p
        return GaussianElem((self.re + o.re) % p, (self.im + o.im) % p, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        p = self.ctx.p
        return GaussianElem((self.re - o.re) % p, (self.im - o.im) % p, self.ctx)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        p = self.ctx.p
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussianElem((a * c - b * d) % p, (a * d + b * c) % p, self.ctx)

    __rmul__ = __mul__

    def __neg__(self):
        p = self.ctx.p
        return GaussianElem(-self.re % p, -self.im % p, self.ctx)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            p = self.ctx.p
            return self.re == other % p and self.im == 0
        if isinstance(other, GaussianElem):
            return self.ctx == other.ctx and self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im, self.ctx.p))

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self) -> "GaussianElem":
        return GaussianElem(self.re, -self.im % self.ctx.p, self.ctx)

    def frobenius(self) -> "GaussianElem":
        """x ** p by repeated squaring; equals conjugate()."""
        return self ** self.ctx.p

    def norm(self) -> int:
        return (self.re * self.re + self.im * self.im) % self.ctx.p

    def inverse(self) -> "GaussianElem":
        n = self.norm()
        if n == 0:
            # a^2 + b^2 = 0 forces a = b = 0 since -1 is a non-residue
            raise ZeroDivisionError("inverse of zero in F_{p^2}")
        p = self.ctx.p
        n_inv = pow(n, p - 2, p)
        c = self.conjugate()
        return GaussianElem(c.re * n_inv % p, c.im * n_inv % p, self.ctx)

    def lift(self) -> tuple[int, int]:
        return center(self.re, self.ctx.p), center(self.im, self.ctx.p)

    def __repr__(self) -> str:
        return f"GaussianElem({format_elem(self)} mod {self.ctx.p})"

    def __str__(self) -> str:
        return format_elem(self)


@dataclass(frozen=True)
class PrimeElem:
    """Element of F_p for a field without a complex extension (e.g. F_2)."""

    re: int
    ctx: FieldCtx

    @property
    def im(self) -> int:
        return 0

    def _wrap(self, other):
        if isinstance(other, PrimeElem):
            _same_ctx(self, other)
            return other.re
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return PrimeElem((self.re + o) % self.ctx.p, self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return PrimeElem((self.re - o) % self.ctx.p, self.ctx)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return PrimeElem((o - self.re) % self.ctx.p, self.ctx)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return PrimeElem(self.re * o % self.ctx.p, self.ctx)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeElem(-self.re % self.ctx.p, self.ctx)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeElem(pow(self.re, e, self.ctx.p), self.ctx)

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is NotImplemented:
            return o
        return self * PrimeElem(o % self.ctx.p, self.ctx).inverse()

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.re == other % self.ctx.p
        if isinstance(other, PrimeElem):
            return self.ctx == other.ctx and self.re == other.re
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.ctx.p))

    def __bool__(self):
        return bool(self.re)

    def conjugate(self) -> "PrimeElem":
        return self

    def norm(self) -> int:
        return self.re * self.re % self.ctx.p

    def inverse(self) -> "PrimeElem":
        if self.re == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.ctx.p}")
        p = self.ctx.p
        return PrimeElem(pow(self.re, p - 2, p), self.ctx)

    def lift(self) -> tuple[int, int]:
        return center(self.re, self.ctx.p), 0

    def __repr__(self) -> str:
        return f"PrimeElem({self.re} mod {self.ctx.p})"

    def __str__(self) -> str:
        return str(self.re)


Scalar = Union[GaussianElem, PrimeElem]

_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "neg": lambda x, y: -x,
}


def gf_arith(op: str, x: Scalar, y: Scalar) -> Scalar:
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    _same_ctx(x, y)
    return _OPS[op](x, y)


def _require_complex(x) -> None:
    if not isinstance(x, GaussianElem):
        raise ValueError("operation requires a complexifiable field")


def conj(x: GaussianElem) -> GaussianElem:
    _require_complex(x)
    return x.conjugate()


def norm_sq(x: GaussianElem) -> int:
    _require_complex(x)
    return x.norm()


def gf_inv(x: Scalar) -> Scalar:
    return x.inverse()


def center(r: int, p: int) -> int:
    """Representative of r mod p in [-(p-1)/2, (p-1)/2] (for p = 2: {0, 1})."""
    r %= p
    if p == 2:
        return r
    return r - p if r > (p - 1) // 2 else r


def center_lift(x: Scalar) -> tuple[int, int]:
    return x.lift()


def format_elem(x: Scalar, centered: bool = True) -> str:
    """Render as "a+bi" / "a-bi"; canonical residues when ``centered`` is False."""
    if isinstance(x, PrimeElem):
        return str(center(x.re, x.ctx.p) if centered else x.re)
    a, b = x.lift() if centered else (x.re, x.im)
    return format_pair(a, b)


def format_pair(a: int, b: int) -> str:
    return f"{a}{'-' if b < 0 else '+'}{abs(b)}i"


_ELEM_RE = re.compile(
    r"^\s*(?P<re>[+-]?\d+)?\s*(?:(?P<sign>[+-])?\s*(?P<im>\d*)\s*i)?\s*$"
)


def parse_pair(text: str) -> tuple[int, int]:
    """Parse "a+bi", "a-bi", "a", "bi", "i", "-i" into signed integers."""
    m = _ELEM_RE.match(text)
    if not m or (m.group("re") is None and "i" not in text):
        raise ValueError(f"cannot parse field element {text!r}")
    re_part = int(m.group("re")) if m.group("re") is not None else 0
    im_part = 0
    if "i" in text:
        digits = m.group("im")
        mag = int(digits) if digits else 1
        sign = m.group("sign")
        if sign is None and m.group("re") is not None:
            # "3i" is parsed as re=3 with no imaginary sign: treat as pure imaginary
            return 0, re_part
        im_part = -mag if sign == "-" else mag
    return re_part, im_part


def parse_elem(text: str, ctx: FieldCtx) -> Scalar:
    a, b = parse_pair(text)
    return ctx.elem(a, b)
