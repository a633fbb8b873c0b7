"""Modal quantum theory over F_2.

States are non-zero vectors over F_2, evolution is any invertible linear
map, and a standard-basis measurement returns the *set* of possible
outcomes with no probabilities attached.

Register layout for oracle circuits: qubit 0 is the output bit y and is
the most significant bit of the basis index; x_1 .. x_n follow, so index
``(y << n) | x`` where x_1 is the high bit of x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import NonPhysicalStateError, PromiseViolation
from .gfield import FieldCtx, make_field
from .linalg import MatrixOp, StateVector, apply_local, apply_permutation

__all__ = [
    "F2",
    "MAX_ORACLE_BITS",
    "ModalMap",
    "Oracle",
    "modal_maps",
    "modal_map",
    "measure_outcomes",
    "apply_oracle",
    "usat_run",
    "usat_decide",
    "binary_search_demo",
    "admissible_oracles",
]

F2: FieldCtx = make_field(2)
MAX_ORACLE_BITS = 20

_MAP_ENTRIES = {
    "X0": ((1, 0), (0, 1)),
    "X1": ((0, 1), (1, 0)),
    "S": ((1, 0), (1, 1)),
    "Sdag": ((1, 1), (0, 1)),
    "D1": ((0, 1), (1, 1)),
    "D2": ((1, 1), (1, 0)),
}


@dataclass(frozen=True)
class ModalMap:
    name: str
    matrix: MatrixOp


def modal_maps() -> list[ModalMap]:
    """The six invertible 2x2 matrices over F_2: X0, X1, S, Sdag, D1, D2."""
    return [ModalMap(name, MatrixOp.of(F2, rows)) for name, rows in _MAP_ENTRIES.items()]


def modal_map(name: str) -> MatrixOp:
    return MatrixOp.of(F2, _MAP_ENTRIES[name])


@dataclass(frozen=True)
class Oracle:
    """Truth table of f : B^n -> B, indexed by x with x_1 as the high bit."""

    n: int
    truth_table: tuple[int, ...]
    sat_count: int = field(init=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORACLE_BITS:
            raise ValueError(f"oracle needs 1 <= n <= {MAX_ORACLE_BITS}, got {self.n}")
        if len(self.truth_table) != 1 << self.n:
            raise ValueError("truth table length must be 2**n")
        if any(v not in (0, 1) for v in self.truth_table):
            raise ValueError("truth table entries must be 0 or 1")
        object.__setattr__(self, "sat_count", sum(self.truth_table))

    def __call__(self, x: int) -> int:
        return self.truth_table[x]

    @classmethod
    def from_ones(cls, n: int, ones) -> "Oracle":
        table = [0] * (1 << n)
        for a in ones:
            idx = parse_bits(a, n) if isinstance(a, str) else int(a)
            if not 0 <= idx < 1 << n:
                raise ValueError(f"assignment {a!r} out of range for n={n}")
            table[idx] = 1
        return cls(n, tuple(table))

    @classmethod
    def zero(cls, n: int) -> "Oracle":
        return cls(n, (0,) * (1 << n))

    @classmethod
    def constant(cls, n: int, value: int) -> "Oracle":
        return cls(n, (value,) * (1 << n))

    @classmethod
    def from_json(cls, text: str) -> "Oracle":
        data = json.loads(text)
        return cls.from_ones(int(data["n"]), data.get("ones", []))

    @classmethod
    def load(cls, path) -> "Oracle":
        return cls.from_json(Path(path).read_text())

    def ones(self) -> list[str]:
        return [format_bits(i, self.n) for i, v in enumerate(self.truth_table) if v]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "ones": self.ones()}, sort_keys=True)

    def is_constant(self) -> bool:
        return self.sat_count in (0, 1 << self.n)

    def is_balanced(self) -> bool:
        return 2 * self.sat_count == 1 << self.n


def parse_bits(text: str, n: int) -> int:
    if len(text) != n or set(text) - {"0", "1"}:
        raise ValueError(f"expected a {n}-bit string, got {text!r}")
    return int(text, 2)


def format_bits(i: int, width: int) -> str:
    return format(i, f"0{width}b") if width else ""


def admissible_oracles(n: int) -> list[Oracle]:
    """The zero oracle followed by every one-hot oracle, in index order."""
    return [Oracle.zero(n)] + [Oracle.from_ones(n, [a]) for a in range(1 << n)]


def measure_outcomes(psi: StateVector) -> set[int]:
    """Possible standard-basis outcomes: the support of the state."""
    if psi.is_zero():
        raise NonPhysicalStateError("the zero vector is not a physical state")
    return set(psi.support())


def apply_oracle(f: Oracle, psi: StateVector) -> StateVector:
    """U_f |y>|x> = |y + f(x)>|x>, as a permutation of basis amplitudes."""
    if psi.dim != 1 << (f.n + 1):
        raise ValueError(f"oracle on {f.n} bits needs dim {1 << (f.n + 1)}, got {psi.dim}")
    high = 1 << f.n
    perm = [i ^ high if f(i & (high - 1)) else i for i in range(psi.dim)]
    return apply_permutation(psi, perm)


def _cnot_fanout(psi: StateVector, n: int) -> StateVector:
    # control y (qubit 0) flips every x_i: the x register is complemented when y = 1
    high = 1 << n
    mask = high - 1
    perm = [i ^ mask if i & high else i for i in range(psi.dim)]
    return apply_permutation(psi, perm)


def _require_usat(f: Oracle) -> None:
    if f.sat_count > 1:
        raise PromiseViolation(f"UNIQUE-SAT needs at most one satisfying input, f has {f.sat_count}")


def usat_run(f: Oracle, *, check_promise: bool = True) -> StateVector:
    """Pre-measurement state of the modal UNIQUE-SAT circuit.

    S on every x_i, U_f, S on every x_i, Sdag on y, CNOT from y onto
    every x_i, Sdag on y.  ``check_promise=False`` runs the circuit on
    oracles with several satisfying inputs, for which no claim is made.
    """
    if check_promise:
        _require_usat(f)
    n = f.n
    width = n + 1
    s, sdag = modal_map("S"), modal_map("Sdag")
    psi = StateVector.basis(F2, 1 << width, 0)
    for q in range(1, width):
        psi = apply_local(s, psi, q, width)
    psi = apply_oracle(f, psi)
    for q in range(1, width):
        psi = apply_local(s, psi, q, width)
    psi = apply_local(sdag, psi, 0, width)
    psi = _cnot_fanout(psi, n)
    psi = apply_local(sdag, psi, 0, width)
    return psi


def usat_decide(f: Oracle) -> str:
    """'satisfiable' or 'unsatisfiable' from the outcome set of one run."""
    outcomes = measure_outcomes(usat_run(f))
    if outcomes == {0}:
        return "unsatisfiable"
    if 0 not in outcomes:
        return "satisfiable"
    raise AssertionError(f"inconsistent outcome set {sorted(outcomes)}")


def binary_search_demo(f: Oracle) -> int | None:
    """Locate the marked input of a one-hot table with n UNIQUE-SAT decisions.

    Demonstration only: each step restricts f to inputs whose next bit is
    0 and asks whether the restriction is satisfiable.  Returns None when
    f is unsatisfiable.
    """
    _require_usat(f)
    if usat_decide(f) == "unsatisfiable":
        return None
    prefix = 0
    for bit in range(f.n):
        shift = f.n - 1 - bit
        table = tuple(
            f(x) if (x >> shift) == (prefix << 1) else 0 for x in range(1 << f.n)
        )
        branch = 0 if usat_decide(Oracle(f.n, table)) == "satisfiable" else 1
        prefix = (prefix << 1) | branch
    return prefix
