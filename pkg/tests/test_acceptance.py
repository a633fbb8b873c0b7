"""Acceptance criteria 1-10, one test each.

Each criterion prints a single PASS/FAIL line in the pytest summary.
Run directly (python tests/test_acceptance.py) for the same lines on stdout.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dqt.algorithms import (  # noqa: E402
    balanced_oracles,
    dj_closed_form,
    dj_decide,
    dj_final_state,
    dj_resources,
    dqc1_usat_run,
    grover_iterations,
    grover_recurrence,
    grover_resources,
    grover_trace,
)
from dqt.cardinal import (  # noqa: E402
    ScaledState,
    approx_sqrt,
    common_norm_solutions,
    realize,
    reference_probabilities,
    representative_state,
    rescale_states,
    validate_realization,
)
from dqt.gfield import conj, make_field  # noqa: E402
from dqt.linalg import MatrixOp, StateVector, apply, herm_dot, is_unitary, tensor  # noqa: E402
from dqt.modal import F2, Oracle, admissible_oracles, modal_maps, usat_decide  # noqa: E402
from dqt.numtheory import a000229_search, a000229_verify  # noqa: E402
from dqt.ordered import (  # noqa: E402
    AmplitudeRegion,
    OrderedRange,
    allowed_amplitudes,
    centered_norm,
    check_transitive,
    region_vectors,
)
from oracles import dense_grover  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}

LEAST_PRIME_ROWS = [(3, 2), (7, 3), (23, 5), (71, 7), (311, 11), (479, 13), (1559, 17), (5711, 19), (10559, 23), (18191, 29)]


def _record(num: int, ok: bool, detail: str) -> None:
    RESULTS[num] = (ok, detail)
    assert ok, f"criterion {num}: {detail}"


# ------------------------------------------------------------------ criteria


def criterion_1():
    t0 = time.perf_counter()
    found = tuple(a000229_search(k) for _, k in LEAST_PRIME_ROWS)
    dt = time.perf_counter() - t0
    ok = found == tuple(p for p, _ in LEAST_PRIME_ROWS) and dt < 60
    return ok, f"least primes by least non-residue, 10 rows in {dt:.2f}s"


def criterion_2():
    times = []
    ok = True
    for p, k in ((422231, 37), (196265095009, 131)):
        t0 = time.perf_counter()
        ok &= a000229_verify(p, k)
        times.append(time.perf_counter() - t0)
    ok &= max(times) < 1
    return ok, f"verify (422231, 37) and (196265095009, 131), slowest {max(times) * 1000:.1f}ms"


def _pm(*pairs):
    return {(sa * a, sb * b) for a, b in pairs for sa in (1, -1) for sb in (1, -1)} | {
        (sb * b, sa * a) for a, b in pairs for sa in (1, -1) for sb in (1, -1)
    }


def criterion_3():
    expected = {
        1: _pm((0, 0), (1, 0), (1, 1), (2, 0), (2, 1)),
        2: _pm((0, 0), (1, 0), (1, 1)),
        3: _pm((0, 0), (1, 0)),
        4: _pm((0, 0), (1, 0)),
        5: _pm((0, 0), (1, 0)),
        6: {(0, 0)},
    }
    r = OrderedRange(311, 11)
    got = {d: allowed_amplitudes(AmplitudeRegion(d, r)) for d in range(1, 7)}
    ok = got == expected and len(got[1]) == 21
    return ok, f"allowed amplitude sets for k=11, sizes {[len(got[d]) for d in range(1, 7)]}"


def criterion_4():
    t0 = time.perf_counter()
    total = correct = 0
    for n in range(1, 7):
        for f in admissible_oracles(n):
            brute = any(f(x) for x in range(1 << n))
            correct += (usat_decide(f) == "satisfiable") == brute
            total += 1
    dt = time.perf_counter() - t0
    return correct == total and dt < 10, f"modal UNIQUE-SAT {correct}/{total} oracles in {dt:.2f}s"


def criterion_5():
    f9 = make_field(3)
    checked = 0
    ok = True
    for n in (1, 2, 3):
        for c in (0, 1):
            ok &= dj_decide(Oracle.constant(n, c), f9) == "constant"
            checked += 1
        for f in balanced_oracles(n):
            ok &= dj_decide(f, f9) == "balanced"
            checked += 1
    r1, r2 = dj_resources(1), dj_resources(2)
    ok &= checked == 2 + 2 + 2 + 6 + 2 + 70
    ok &= (r1.k, r1.pi_k, r1.p) == (37, 12, 422231)
    ok &= (r2.k, r2.pi_k, r2.p) == (257, 55, None)
    return ok, f"{checked} DJ oracles over F_9; resources n=1 {(r1.k, r1.pi_k, r1.p)}, n=2 {(r2.k, r2.pi_k, r2.p)}"


def criterion_6():
    tr = grover_trace(8)
    tp = tr.target_probs
    ok = (
        tr.raw == ((1, 1), (10, 2), (44, -4))
        and tr.weights == (16, 4, 1)
        and tr.mu == 2048
        and all(sum(x * x for x in row) == 2048 for row in tr.scaled)
        and tp == (256, 1600, 1936)
        and tr.other_probs == (256, 64, 16)
        and all(a < b for a, b in zip(tp, tp[1:]))
    )
    return ok, f"Grover N=8 target probs {tp} over {tr.mu}"


def criterion_7():
    r4, r8 = grover_resources(4), grover_resources(8)
    tr = grover_trace(4)
    ok = (
        (r4.k, r4.pi_k, r4.p) == (131, 32, 196265095009)
        and (r8.k, r8.pi_k) == (32771, 3513)
        and tr.scaled[-1] == (4, 0, 0, 0)
        and (tr.target_probs[-1], tr.mu) == (16, 16)
    )
    return ok, f"Grover resources N=4 {(r4.k, r4.pi_k, r4.p)}, N=8 {(r8.k, r8.pi_k)}"


def criterion_8():
    roots = {m: approx_sqrt(m).s for m in (2, 3, 6, 200, 300, 600)}
    ok = roots == {2: 2, 3: 2, 6: 3, 200: 15, 300: 18, 600: 25}
    states = [representative_state(m) for m in (1, 2, 3, 4)]
    ref = reference_probabilities(states)
    s0, s1 = rescale_states(states, 24, 0), rescale_states(states, 24, 1)
    ok &= [s.mu for s in s0] == [36, 32, 48, 36]
    ok &= [s.mu for s in s1] == [2500, 2592, 2700, 2500]
    fail = validate_realization(realize([ScaledState(s, w) for s, w in zip(states, (4, 3, 2, 2))]), ref)
    good = validate_realization(realize([ScaledState(s, w) for s, w in zip(states, (16, 12, 9, 8))]), ref)
    ok &= len(fail.reversed) >= 1 and not good.reversed
    r0, r1 = realize(s0), realize(s1)
    rep0, rep1 = validate_realization(r0, ref), validate_realization(r1, ref)
    ok &= ((2, 0), (1, 0)) in rep0.collapsed and r0.probs[2][0] == r0.probs[1][0] == 16
    ok &= not rep1.collapsed and (r1.probs[2][0], r1.probs[1][0]) == (900, 1296)
    return ok, f"sqrt' values, mu sets, failing choice {len(fail.reversed)} reversals, t=0 collapse resolved at t=1"


def _prop_hermitian(rng, f, p, cases=1000):
    def el():
        return f.elem(rng.randrange(p), rng.randrange(p))

    def vec(d):
        return StateVector.of(f, [el() for _ in range(d)])

    for _ in range(cases):
        phi, psi, chi, a, b = vec(3), vec(3), vec(3), el(), el()
        if herm_dot(phi, psi) != conj(herm_dot(psi, phi)):
            return False
        if herm_dot(phi, psi.scale(a) + chi.scale(b)) != a * herm_dot(phi, psi) + b * herm_dot(phi, chi):
            return False
    return True


def _prop_unitary(rng, f, p, cases=1000):
    by_norm = {}
    for x in f.elements():
        by_norm.setdefault(x.norm(), []).append(x)

    def unitary():
        a = f.elem(rng.randrange(p), rng.randrange(p))
        b = rng.choice(by_norm[(1 - a.norm()) % p])
        u = rng.choice(by_norm[1])
        return MatrixOp.of(f, [[a, b], [-conj(b) * u, conj(a) * u]])

    for _ in range(cases):
        u = tensor(unitary(), unitary())
        if not is_unitary(u):
            return False
        phi = StateVector.of(f, [f.elem(rng.randrange(p), rng.randrange(p)) for _ in range(4)])
        psi = StateVector.of(f, [f.elem(rng.randrange(p), rng.randrange(p)) for _ in range(4)])
        if herm_dot(apply(u, phi), apply(u, psi)) != herm_dot(phi, psi):
            return False
    return True


def criterion_9():
    rng = random.Random(2024)
    p = 311
    f = make_field(p)
    checks = {}
    checks["conditions A and B"] = _prop_hermitian(rng, f, p)
    f9 = list(make_field(3).elements())
    checks["conj on F_9"] = all(
        conj(conj(x)) == x and conj(x + y) == conj(x) + conj(y) and conj(x * y) == conj(x) * conj(y)
        for x in f9
        for y in f9
    )
    checks["unitary invariance"] = _prop_unitary(rng, f, p)
    a = next(x for x in f.elements() if x.norm() == p - 1)
    witness = StateVector.of(f, [1, a])
    r11 = OrderedRange(311, 11)
    inside = all(
        (centered_norm(v) == 0) == v.is_zero() for v in region_vectors(AmplitudeRegion(2, r11), f)
    )
    checks["condition C"] = not herm_dot(witness, witness) and inside
    mats = [m.matrix for m in modal_maps()]
    eye = MatrixOp.identity(F2, 2)
    checks["modal group"] = (
        all(x @ y in mats for x in mats for y in mats)
        and len(set(mats)) == 6
        and eye in mats
        and any(x @ y != y @ x for x in mats for y in mats)
    )
    ordered_ok = True
    for pp, k in LEAST_PRIME_ROWS:
        r = OrderedRange(pp, k)
        ordered_ok &= all(check_transitive(r.window(rng.randrange(pp)), r) for _ in range(100))
        ordered_ok &= not check_transitive(r.extended_window(0), r)
    checks["transitive order"] = ordered_ok
    dj_ok = True
    for n in (1, 2, 3):
        for g in [Oracle.constant(n, 0), Oracle.constant(n, 1), *balanced_oracles(n)]:
            dj_ok &= dj_final_state(g) == dj_closed_form(g)
    checks["DJ closed form"] = dj_ok
    grover_ok = True
    for N in (4, 8, 16):
        steps = grover_iterations(N)
        raw = grover_recurrence(N, steps)
        for t in range(N):
            dense = dense_grover(N, t, steps)
            grover_ok &= all(v == [a if i == t else b for i in range(N)] for v, (a, b) in zip(dense, raw))
    checks["Grover recurrence"] = grover_ok
    checks["2x^2 = 3y^2"] = common_norm_solutions(2, 3, 10**6) == []
    failed = [name for name, ok in checks.items() if not ok]
    return not failed, f"{len(checks) - len(failed)}/{len(checks)} property suites" + (
        f", failed: {failed}" if failed else ""
    )


def criterion_10():
    f3, f7 = make_field(3), make_field(7)
    ok = True
    for g in admissible_oracles(2):
        res = dqc1_usat_run(g, f3)
        ok &= (0 not in res.outcomes) == (g.sat_count == 1)
    broken = sum(
        (0 not in dqc1_usat_run(g, f7).outcomes) != (g.sat_count == 1) for g in admissible_oracles(2)
    )
    ok &= broken >= 1
    return ok, f"p=3 decides all 5 oracles; p=7 fails on {broken} of 5"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, detail = CRITERIA[num]()
    _record(num, ok, detail)


def report_lines() -> list[str]:
    return [
        f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"
        for num, (ok, detail) in sorted(RESULTS.items())
    ]


if __name__ == "__main__":
    for num, fn in sorted(CRITERIA.items()):
        ok, detail = fn()
        RESULTS[num] = (ok, detail)
    print("\n".join(report_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
