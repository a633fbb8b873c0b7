"""Deutsch-Jozsa, Grover and the complexified-field UNIQUE-SAT variant.

All circuits use the integer-scaled Hadamard [[1, 1], [1, -1]] and the
integer-scaled Grover diffusion, so every run can be carried out exactly
over INTEGERS (to audit the amplitude range) or inside a field.

Resource estimates follow one rule: if a computation uses amplitudes with
|alpha|^2 <= A in dimension d, the ordered range must satisfy
d * A <= (k-1)/2, so k >= 2 d A + 1; k is then rounded up to a prime and
p is the least prime whose least quadratic non-residue is k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .cardinal import rescale_states, squarefree_split
from .errors import PromiseViolation, RangeOverflowError
from .gfield import FieldCtx
from .linalg import INTEGERS, MatrixOp, StateVector, apply_local
from .modal import Oracle, apply_oracle
from .numtheory import DEFAULT_BUDGET, a000229_resolve, least_qnr, next_prime, prime_pi

__all__ = [
    "ResourceEstimate",
    "GroverOperators",
    "GroverTrace",
    "Dqc1Result",
    "hadamard",
    "dj_final_state",
    "dj_closed_form",
    "dj_decide",
    "dj_resources",
    "balanced_oracles",
    "grover_iterations",
    "grover_build",
    "grover_recurrence",
    "grover_trace",
    "grover_resources",
    "dqc1_usat_run",
    "equalizing_weights",
]


def hadamard(ctx=INTEGERS) -> MatrixOp:
    return MatrixOp.of(ctx, ((1, 1), (1, -1)))


@dataclass(frozen=True)
class ResourceEstimate:
    n: int
    d: int
    amp_sq_bound: int
    k_bound: int
    k: int
    pi_k: int
    p: int | None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "amp_sq_bound": self.amp_sq_bound,
            "k_bound": self.k_bound,
            "k": self.k,
            "pi_k": self.pi_k,
            "p": self.p,
        }


def _estimate(n: int, d: int, amp_sq: int, budget: int, workers: int | None) -> ResourceEstimate:
    k_bound = 2 * d * amp_sq + 1
    k = next_prime(k_bound)
    p = a000229_resolve(k, budget=budget, workers=workers)
    return ResourceEstimate(n, d, amp_sq, k_bound, k, prime_pi(k), p)


def _check_range(ctx, d: int, amp_sq: int) -> None:
    # the computation is faithful in ctx only if d * amp_sq <= (k-1)/2
    if ctx is INTEGERS:
        return
    k = least_qnr(ctx.p).k
    if 2 * d * amp_sq > k - 1:
        need = next_prime(2 * d * amp_sq + 1)
        raise RangeOverflowError(
            f"p={ctx.p} has ordered range k={k}; this computation needs k >= {need}",
            required_k=need,
        )


# ---------------------------------------------------------------- Deutsch-Jozsa


def dj_final_state(f: Oracle, ctx=INTEGERS) -> StateVector:
    """|1>|0...0>, H on all n+1 qubits, U_f, H on the x register."""
    width = f.n + 1
    h = hadamard(ctx)
    psi = StateVector.basis(ctx, 1 << width, 1 << f.n)
    for q in range(width):
        psi = apply_local(h, psi, q, width)
    psi = apply_oracle(f, psi)
    for q in range(1, width):
        psi = apply_local(h, psi, q, width)
    return psi


def dj_closed_form(f: Oracle, ctx=INTEGERS) -> StateVector:
    """sum_z sum_x (-1)^(f(x) + x.z) (|0>|z> - |1>|z>), evaluated term by term."""
    size = 1 << f.n
    amps = [0] * (2 * size)
    for z in range(size):
        total = sum(
            (-1) ** (f(x) + bin(x & z).count("1")) for x in range(size)
        )
        amps[z] = total
        amps[size + z] = -total
    return StateVector.of(ctx, amps)


def dj_decide(f: Oracle, ctx=INTEGERS) -> str:
    """'constant' or 'balanced' from the final state's support.

    Constant means the |y>|0...0> amplitudes are non-zero and everything
    else vanishes; balanced means the |y>|0...0> amplitudes vanish.  Any
    other pattern reveals a function that is neither.
    """
    psi = dj_final_state(f, ctx)
    size = 1 << f.n
    zero_idx = {0, size}
    support = set(psi.support())
    if not support:
        raise PromiseViolation("final state vanished in this field")
    if support == zero_idx:
        return "constant"
    if not support & zero_idx:
        return "balanced"
    raise PromiseViolation("f is neither constant nor balanced")


def balanced_oracles(n: int):
    size = 1 << n
    for ones in combinations(range(size), size // 2):
        yield Oracle.from_ones(n, ones)


def dj_resources(n: int, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> ResourceEstimate:
    """Range needed by the n-bit DJ run: amplitudes up to 2^n in dimension 2^(n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _estimate(n, 1 << (n + 1), 1 << (2 * n), budget, workers)


# ----------------------------------------------------------------------- Grover


def grover_iterations(N: int) -> int:
    """round(pi / (4 arccos sqrt(1 - 1/N)) - 1/2), half away from zero.

    Observer-side float arithmetic, never field arithmetic.
    """
    x = math.pi / (4 * math.acos(math.sqrt(1 - 1 / N))) - 0.5
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


def _require_power_of_two(N: int) -> int:
    if N < 4 or N & (N - 1):
        raise ValueError(f"N must be a power of two >= 4, got {N}")
    return N.bit_length() - 1


@dataclass(frozen=True)
class GroverOperators:
    D: MatrixOp
    R: MatrixOp
    j: int


def grover_build(N: int, target: int = 0, ctx=INTEGERS) -> GroverOperators:
    """Diffusion with 1 - N/2 on the diagonal and 1 elsewhere; R flips the target."""
    _require_power_of_two(N)
    if not 0 <= target < N:
        raise ValueError("target out of range")
    diag = 1 - N // 2
    D = MatrixOp.of(ctx, [[diag if i == j else 1 for j in range(N)] for i in range(N)])
    R = MatrixOp.diagonal(ctx, [-1 if i == target else 1 for i in range(N)])
    return GroverOperators(D, R, grover_iterations(N))


def grover_recurrence(N: int, steps: int) -> list[tuple[int, int]]:
    """(a_l, b_l) for l = 0..steps with a_0 = b_0 = 1."""
    half = N // 2
    out = [(1, 1)]
    a, b = 1, 1
    for _ in range(steps):
        a, b = (half - 1) * a + (N - 1) * b, -a + (half - 1) * b
        out.append((a, b))
    return out


def _dr_step(v: list[int], target: int, half: int) -> list[int]:
    # D R v without materializing D: (D w)_i = sum(w) - (N/2) w_i
    w = list(v)
    w[target] = -w[target]
    s = sum(w)
    return [s - half * x for x in w]


def equalizing_weights(norms: list[int]) -> list[int] | None:
    """Least integer weights w_l with w_l^2 * norm_l all equal, or None."""
    splits = [squarefree_split(n) for n in norms]
    if len({r for _, r in splits}) != 1:
        return None
    top = math.lcm(*(c for c, _ in splits))
    return [top // c for c, _ in splits]


@dataclass(frozen=True)
class GroverTrace:
    N: int
    target: int
    j: int
    raw: tuple[tuple[int, int], ...]
    weights: tuple[int, ...]
    scaled: tuple[tuple[int, ...], ...]
    mus: tuple[int, ...]
    target_probs: tuple[int, ...]
    other_probs: tuple[int, ...]

    @property
    def mu(self) -> int:
        return self.mus[-1]

    @property
    def exact(self) -> bool:
        """True when every step was rescaled to exactly the same norm."""
        return len(set(self.mus)) == 1

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "target": self.target,
            "j": self.j,
            "raw": [list(r) for r in self.raw],
            "weights": list(self.weights),
            "mu": self.mu,
            "mus": list(self.mus),
            "target_probs": list(self.target_probs),
            "other_probs": list(self.other_probs),
        }


def grover_trace(N: int, target: int = 0, ctx=INTEGERS, steps: int | None = None) -> GroverTrace:
    """Run the integer Grover iteration and rescale each step to a common norm.

    The (a, b) recurrence is cross-checked against the full N-vector
    evolution.  Weights are the least integers equalizing the norms when
    they exist, otherwise the approximate-square-root weights of the
    cardinal module.  With a field ``ctx``, raises RangeOverflowError if
    its ordered range cannot hold the run.
    """
    _require_power_of_two(N)
    if not 0 <= target < N:
        raise ValueError("target out of range")
    j = grover_iterations(N) if steps is None else steps
    raw = grover_recurrence(N, j)
    v = [1] * N
    half = N // 2
    for l in range(1, j + 1):
        v = _dr_step(v, target, half)
        a, b = raw[l]
        if v[target] != a or any(x != b for i, x in enumerate(v) if i != target):
            raise AssertionError(f"recurrence disagrees with the full evolution at step {l}")
    norms = [a * a + (N - 1) * b * b for a, b in raw]
    weights = equalizing_weights(norms)
    if weights is None:
        states = [
            StateVector.of(INTEGERS, [a if i == target else b for i in range(N)]) for a, b in raw
        ]
        weights = [s.weight for s in rescale_states(states, math.lcm(*norms))]
    mus = [w * w * m for w, m in zip(weights, norms)]
    _check_range(ctx, N, max(mus))
    scaled = tuple(
        tuple(w * (a if i == target else b) for i in range(N)) for w, (a, b) in zip(weights, raw)
    )
    return GroverTrace(
        N=N,
        target=target,
        j=j,
        raw=tuple(raw),
        weights=tuple(weights),
        scaled=scaled,
        mus=tuple(mus),
        target_probs=tuple((w * a) ** 2 for w, (a, _) in zip(weights, raw)),
        other_probs=tuple((w * b) ** 2 for w, (_, b) in zip(weights, raw)),
    )


def grover_resources(N: int, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> ResourceEstimate:
    """max |a_j|^2 <= 2 (N/2)^(2j+1) in dimension N, hence k >= 8 (N/2)^(2j+2) + 1."""
    n = _require_power_of_two(N)
    j = grover_iterations(N)
    bound = 2 * (N // 2) ** (2 * j + 1)
    return _estimate(n, N, bound, budget, workers)


# ------------------------------------------------- UNIQUE-SAT over F_{p^2}


@dataclass(frozen=True)
class Dqc1Result:
    state: StateVector
    supernatural: bool
    zero_amplitude: object

    @property
    def outcomes(self) -> set[int]:
        return set(self.state.support())


def dqc1_usat_run(f: Oracle, ctx: FieldCtx) -> Dqc1Result:
    """H on every x_i, U_f, H on every x_i, with y starting in |0>.

    For a satisfiable f the |0>|0...0> amplitude is 2^n - 1, so it
    vanishes exactly when p divides 2^n - 1; the flag ``supernatural``
    records that divisibility (then one run decides satisfiability).
    """
    if f.sat_count > 1:
        raise PromiseViolation("UNIQUE-SAT needs at most one satisfying input")
    if not ctx.complexifiable:
        raise ValueError("needs a complexifiable field")
    width = f.n + 1
    h = hadamard(ctx)
    psi = StateVector.basis(ctx, 1 << width, 0)
    for q in range(1, width):
        psi = apply_local(h, psi, q, width)
    psi = apply_oracle(f, psi)
    for q in range(1, width):
        psi = apply_local(h, psi, q, width)
    supernatural = ((1 << f.n) - 1) % ctx.p == 0
    if f.sat_count == 1 and (not psi[0]) != supernatural:
        raise AssertionError("simulation disagrees with the divisibility predicate")
    return Dqc1Result(psi, supernatural, psi[0])
