"""Slow, independent reference implementations used only by the tests."""

from itertools import permutations


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def squares_mod(p: int) -> set[int]:
    return {(x * x) % p for x in range(1, p)}


def brute_least_qnr(p: int) -> int:
    sq = squares_mod(p)
    k = 1
    while k in sq:
        k += 1
    return k


def brute_a000229(k: int, limit: int) -> int | None:
    for p in range(3, limit):
        if trial_division_is_prime(p) and brute_least_qnr(p) == k:
            return p
    return None


def gauss_mul(x, y, p):
    (a, b), (c, d) = x, y
    return ((a * c - b * d) % p, (a * d + b * c) % p)


def gauss_pow(x, e, p):
    out = (1, 0)
    for _ in range(e):
        out = gauss_mul(out, x, p)
    return out


def brute_inverse(x, p):
    for a in range(p):
        for b in range(p):
            if gauss_mul(x, (a, b), p) == (1, 0):
                return (a, b)
    return None


def _sign(perm) -> int:
    s = 1
    seen = list(perm)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                s = -s
    return s


def leibniz_det(rows):
    """Integer determinant by the permutation expansion."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        term = _sign(perm)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def dense_grover(N: int, target: int, steps: int) -> list[list[int]]:
    """Explicit matrix products D @ R @ v, no shortcuts."""
    half = N // 2
    D = [[(1 - half) if i == j else 1 for j in range(N)] for i in range(N)]
    R = [[(-1 if i == target else 1) if i == j else 0 for j in range(N)] for i in range(N)]
    v = [1] * N
    out = [v]
    for _ in range(steps):
        rv = [sum(R[i][j] * v[j] for j in range(N)) for i in range(N)]
        v = [sum(D[i][j] * rv[j] for j in range(N)) for i in range(N)]
        out.append(v)
    return out
