"""Exact dense vectors and matrices.

Scalars come from a *context*: a :class:`~dqt.gfield.FieldCtx` (elements are
GaussianElem or PrimeElem) or :data:`INTEGERS` (plain Python ints, no
reduction).  Integer-scaled circuits are simulated over INTEGERS and then
reduced into a field with :meth:`StateVector.reduce`, which is how the
amplitude range of a computation is audited before a field is chosen.

Basis index convention: for a tensor product the left factor is the most
significant part of the index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gfield import FieldCtx, format_elem

__all__ = [
    "INTEGERS",
    "IntegerRing",
    "StateVector",
    "MatrixOp",
    "herm_dot",
    "is_unitary",
    "is_invertible",
    "determinant",
    "tensor",
    "apply",
    "apply_local",
    "apply_permutation",
    "kron_all",
]


class IntegerRing:
    """The integers as a scalar context (no modular wrap-around)."""

    complexifiable = False
    p = 0

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return int(value)
        raise TypeError(f"expected an integer, got {value!r}")

    def elem(self, re: int = 0, im: int = 0) -> int:
        if im:
            raise ValueError("INTEGERS has no imaginary unit")
        return re

    zero = 0
    one = 1

    def __repr__(self) -> str:
        return "INTEGERS"

    __str__ = __repr__

    def __reduce__(self):
        return "INTEGERS"


INTEGERS = IntegerRing()


def _render(x) -> str:
    if isinstance(x, int):
        return str(x)
    return format_elem(x)


@dataclass(frozen=True)
class StateVector:
    ctx: object
    amps: tuple

    @classmethod
    def of(cls, ctx, values: Iterable) -> "StateVector":
        amps = tuple(ctx.coerce(v) for v in values)
        if not amps:
            raise ValueError("a state needs at least one amplitude")
        return cls(ctx, amps)

    @classmethod
    def basis(cls, ctx, dim: int, index: int) -> "StateVector":
        if not 0 <= index < dim:
            raise IndexError(f"basis index {index} out of range for dim {dim}")
        return cls(ctx, tuple(ctx.one if i == index else ctx.zero for i in range(dim)))

    @classmethod
    def zeros(cls, ctx, dim: int) -> "StateVector":
        return cls(ctx, (ctx.zero,) * dim)

    @property
    def dim(self) -> int:
        return len(self.amps)

    def __len__(self) -> int:
        return len(self.amps)

    def __iter__(self):
        return iter(self.amps)

    def __getitem__(self, i):
        return self.amps[i]

    def is_zero(self) -> bool:
        """The zero vector is algebraically fine but not a physical state."""
        return not any(self.amps)

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self.amps) if a]

    def __add__(self, other: "StateVector") -> "StateVector":
        _check_pair(self, other)
        return StateVector(self.ctx, tuple(a + b for a, b in zip(self.amps, other.amps)))

    def __sub__(self, other: "StateVector") -> "StateVector":
        _check_pair(self, other)
        return StateVector(self.ctx, tuple(a - b for a, b in zip(self.amps, other.amps)))

    def scale(self, c) -> "StateVector":
        c = self.ctx.coerce(c)
        return StateVector(self.ctx, tuple(c * a for a in self.amps))

    def reduce(self, ctx: FieldCtx) -> "StateVector":
        """Map an integer vector into ``ctx`` (or re-check an existing one)."""
        return StateVector(ctx, tuple(ctx.coerce(a) for a in self.amps))

    def lifts(self) -> list[tuple[int, int]]:
        """Centered signed (re, im) pairs; integers map to (a, 0)."""
        return [(a, 0) if isinstance(a, int) else a.lift() for a in self.amps]

    def render(self) -> list[str]:
        return [_render(a) for a in self.amps]

    def to_json(self) -> str:
        return json.dumps(self.render())

    def __str__(self) -> str:
        return "(" + ", ".join(self.render()) + ")"


@dataclass(frozen=True)
class MatrixOp:
    ctx: object
    rows: tuple

    @classmethod
    def of(cls, ctx, rows: Sequence[Sequence]) -> "MatrixOp":
        rows = tuple(tuple(ctx.coerce(v) for v in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        return cls(ctx, rows)

    @classmethod
    def identity(cls, ctx, n: int) -> "MatrixOp":
        return cls(ctx, tuple(tuple(ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, ctx, values: Sequence) -> "MatrixOp":
        vals = [ctx.coerce(v) for v in values]
        n = len(vals)
        return cls(ctx, tuple(tuple(vals[i] if i == j else ctx.zero for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def dagger(self) -> "MatrixOp":
        r, c = self.shape
        return MatrixOp(self.ctx, tuple(tuple(self.rows[i][j].conjugate() for i in range(r)) for j in range(c)))

    def transpose(self) -> "MatrixOp":
        r, c = self.shape
        return MatrixOp(self.ctx, tuple(tuple(self.rows[i][j] for i in range(r)) for j in range(c)))

    def __matmul__(self, other):
        if isinstance(other, StateVector):
            return apply(self, other)
        if not isinstance(other, MatrixOp):
            return NotImplemented
        _check_ctx(self.ctx, other.ctx)
        k, k2 = self.shape[1], other.shape[0]
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        zero = self.ctx.zero
        return MatrixOp(
            self.ctx,
            tuple(tuple(_dot(row, col, zero) for col in cols) for row in self.rows),
        )

    def reduce(self, ctx: FieldCtx) -> "MatrixOp":
        return MatrixOp(ctx, tuple(tuple(ctx.coerce(v) for v in row) for row in self.rows))

    def render(self) -> list[list[str]]:
        return [[_render(v) for v in row] for row in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.render())


def _check_ctx(a, b) -> None:
    if a != b:
        raise ValueError(f"mixed contexts: {a} and {b}")


def _check_pair(x: StateVector, y: StateVector) -> None:
    _check_ctx(x.ctx, y.ctx)
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")


def _dot(xs, ys, zero):
    total = zero
    for x, y in zip(xs, ys):
        total = total + x * y
    return total


def herm_dot(phi: StateVector, psi: StateVector):
    """<phi|psi> = sum conj(phi_i) psi_i (conjugation is trivial outside F_{p^2})."""
    _check_pair(phi, psi)
    return _dot((b.conjugate() for b in phi.amps), psi.amps, phi.ctx.zero)


def apply(m: MatrixOp, psi: StateVector) -> StateVector:
    _check_ctx(m.ctx, psi.ctx)
    if m.shape[1] != psi.dim:
        raise ValueError(f"shape mismatch {m.shape} applied to dim {psi.dim}")
    zero = m.ctx.zero
    return StateVector(m.ctx, tuple(_dot(row, psi.amps, zero) for row in m.rows))


def is_unitary(m: MatrixOp) -> bool:
    if not m.is_square:
        raise ValueError("is_unitary needs a square matrix")
    return m.dagger() @ m == MatrixOp.identity(m.ctx, m.shape[0])


def determinant(m: MatrixOp):
    """Determinant by Gaussian elimination over the field (Bareiss over INTEGERS)."""
    if not m.is_square:
        raise ValueError("determinant needs a square matrix")
    n = m.shape[0]
    a = [list(row) for row in m.rows]
    if m.ctx is INTEGERS:
        return _bareiss(a)
    det = m.ctx.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return m.ctx.zero
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_invertible(m: MatrixOp) -> bool:
    return bool(determinant(m))


def tensor(x, y):
    """Kronecker product of two vectors or two matrices (left factor most significant)."""
    if isinstance(x, StateVector) and isinstance(y, StateVector):
        _check_ctx(x.ctx, y.ctx)
        return StateVector(x.ctx, tuple(a * b for a in x.amps for b in y.amps))
    if isinstance(x, MatrixOp) and isinstance(y, MatrixOp):
        _check_ctx(x.ctx, y.ctx)
        return MatrixOp(
            x.ctx,
            tuple(
                tuple(a * b for a in xrow for b in yrow)
                for xrow in x.rows
                for yrow in y.rows
            ),
        )
    raise TypeError("tensor needs two StateVectors or two MatrixOps")


def kron_all(factors: Sequence):
    out = factors[0]
    for f in factors[1:]:
        out = tensor(out, f)
    return out


def apply_local(gate: MatrixOp, psi: StateVector, qubit: int, n_qubits: int) -> StateVector:
    """Apply a 2x2 gate to one qubit of an n-qubit register.

    Qubit 0 is the most significant.  Agrees exactly with
    ``apply(I x ... x gate x ... x I, psi)``.
    """
    _check_ctx(gate.ctx, psi.ctx)
    if gate.shape != (2, 2):
        raise ValueError("apply_local expects a 2x2 gate")
    if psi.dim != 1 << n_qubits or not 0 <= qubit < n_qubits:
        raise ValueError("register size does not match the state")
    (g00, g01), (g10, g11) = gate.rows
    stride = 1 << (n_qubits - 1 - qubit)
    out = list(psi.amps)
    for i in range(psi.dim):
        if i & stride:
            continue
        a0, a1 = psi.amps[i], psi.amps[i | stride]
        out[i] = g00 * a0 + g01 * a1
        out[i | stride] = g10 * a0 + g11 * a1
    return StateVector(psi.ctx, tuple(out))


def apply_permutation(psi: StateVector, perm: Sequence[int]) -> StateVector:
    """Move the amplitude at index i to index perm[i]."""
    if len(perm) != psi.dim:
        raise ValueError("permutation size does not match the state")
    out = [None] * psi.dim
    for i, j in enumerate(perm):
        out[j] = psi.amps[i]
    if any(v is None for v in out):
        raise ValueError("not a permutation")
    return StateVector(psi.ctx, tuple(out))
