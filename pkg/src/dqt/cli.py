"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 field range too small (the
message names the k required), 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .algorithms import (
    dj_decide,
    dj_final_state,
    dj_resources,
    dqc1_usat_run,
    grover_resources,
    grover_trace,
)
from .cardinal import (
    ScaledState,
    realize,
    reference_probabilities,
    representative_state,
    rescale_states,
    validate_realization,
)
from .errors import PromiseViolation, RangeOverflowError
from .gfield import make_field
from .linalg import INTEGERS
from .modal import Oracle, admissible_oracles, format_bits, measure_outcomes, usat_decide, usat_run
from .numtheory import (
    DEFAULT_BUDGET,
    a000229_search,
    a000229_verify,
    default_workers,
    least_qnr,
    nth_prime,
    prime_pi,
)
from .ordered import AmplitudeRegion, OrderedRange, allowed_amplitudes

SCHEMA_VERSION = 1
CLI_MAX_BITS = 12

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_BUDGET = 4


class BudgetExhausted(Exception):
    pass


class UsageError(Exception):
    pass


def pretty_pair(a: int, b: int) -> str:
    """Compact a+bi rendering: 0, -1, 2i, -i, 1+i, -2-i."""
    if b == 0:
        return str(a)
    im = {1: "i", -1: "-i"}.get(b, f"{b}i")
    if a == 0:
        return im
    return f"{a}{'+' if b > 0 else '-'}{'' if abs(b) == 1 else abs(b)}i"


def _sorted_pairs(pairs):
    return sorted(pairs, key=lambda ab: (ab[0] ** 2 + ab[1] ** 2, -ab[0], -ab[1]))


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _load_oracle(path: str) -> Oracle:
    try:
        f = Oracle.load(path)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read oracle {path}: {exc}") from exc
    if f.n > CLI_MAX_BITS:
        raise UsageError(f"oracle has n={f.n}; the CLI supports n <= {CLI_MAX_BITS}")
    return f


def _field(p: int):
    try:
        return make_field(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _d_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected D or LO-HI, got {text!r}") from exc


# ---------------------------------------------------------------- commands


def cmd_nt_table(args):
    rows = []
    for i in range(1, args.rows + 1):
        k = nth_prime(i)
        p = a000229_search(k, budget=args.budget, workers=args.workers)
        if p is None:
            raise BudgetExhausted(f"row {i} (k={k}) not found within budget {args.budget}")
        rows.append({"p": p, "k": k, "pi_k": i})
    text = _table(["p", "k", "pi(k)"], [[r["p"], r["k"], r["pi_k"]] for r in rows])
    return {"rows": rows}, text


def cmd_nt_find_p(args):
    p = a000229_search(args.k, budget=args.budget, workers=args.workers)
    if p is None:
        raise BudgetExhausted(f"no prime p <= {args.budget} has least non-residue {args.k}")
    return {"k": args.k, "p": p, "pi_k": prime_pi(args.k)}, f"k={args.k}  p={p}  pi(k)={prime_pi(args.k)}"


def cmd_nt_verify(args):
    ok = a000229_verify(args.p, args.k)
    return {"p": args.p, "k": args.k, "verified": ok}, f"p={args.p}  k={args.k}  verified={'true' if ok else 'false'}"


def cmd_amplitudes(args):
    if args.p is not None:
        rng = OrderedRange(args.p, least_qnr(args.p).k)
        if rng.k != args.k:
            raise UsageError(f"p={args.p} has least non-residue {rng.k}, not {args.k}")
    else:
        try:
            rng = OrderedRange.for_k(args.k, budget=args.budget)
        except LookupError as exc:
            raise BudgetExhausted(str(exc)) from exc
    rows, lines = [], []
    for d in args.d:
        pairs = _sorted_pairs(allowed_amplitudes(AmplitudeRegion(d, rng)))
        rows.append({"d": d, "size": len(pairs), "amplitudes": [list(ab) for ab in pairs]})
        body = ", ".join(pretty_pair(a, b) for a, b in pairs)
        lines.append(f"d={d}  |F^{d}({rng.k})|={len(pairs)}  {{{body}}}")
    return {"p": rng.p, "k": rng.k, "rows": rows}, f"p={rng.p}  k={rng.k}\n" + "\n".join(lines)


def _modal_row(f: Oracle, sample_rng):
    psi = usat_run(f)
    outcomes = sorted(measure_outcomes(psi))
    decision = usat_decide(f)
    row = {
        "ones": f.ones(),
        "outcomes": [format_bits(i, f.n + 1) for i in outcomes],
        "decision": decision,
        "correct": (decision == "satisfiable") == (f.sat_count == 1),
    }
    if sample_rng is not None:
        row["sample"] = format_bits(sample_rng.choice(outcomes), f.n + 1)
    return row


def cmd_modal_usat(args):
    sample_rng = random.Random(args.sample) if args.sample is not None else None
    if args.oracle:
        f = _load_oracle(args.oracle)
        if f.sat_count > 1:
            raise UsageError(f"oracle has {f.sat_count} satisfying inputs; UNIQUE-SAT needs at most one")
        oracles = [f]
    else:
        if not 1 <= args.exhaustive <= CLI_MAX_BITS:
            raise UsageError(f"--exhaustive needs 1 <= N <= {CLI_MAX_BITS}")
        oracles = admissible_oracles(args.exhaustive)
    rows = [_modal_row(f, sample_rng) for f in oracles]
    lines = []
    for r in rows:
        ones = ",".join(r["ones"]) or "-"
        line = f"ones={ones}  outcomes={{{', '.join(r['outcomes'])}}}  {r['decision']}"
        if "sample" in r:
            line += f"  sample={r['sample']}"
        lines.append(line)
    correct = sum(r["correct"] for r in rows)
    lines.append(f"correct {correct}/{len(rows)}")
    payload = {"rows": rows, "correct": correct, "total": len(rows)}
    if sample_rng is not None:
        note = "extrapolation: no distribution is assigned to modal outcomes; sample is uniform over the outcome set"
        payload["sample_note"] = note
        lines.append(note)
    return payload, "\n".join(lines)


def cmd_dqc1_usat(args):
    f = _load_oracle(args.oracle)
    if f.sat_count > 1:
        raise UsageError("UNIQUE-SAT oracle must have at most one satisfying input")
    ctx = _field(args.p)
    if not ctx.complexifiable:
        raise UsageError(f"p={args.p} is not 3 mod 4")
    res = dqc1_usat_run(f, ctx)
    outcomes = [format_bits(i, f.n + 1) for i in sorted(res.outcomes)]
    zero_absent = 0 not in res.outcomes
    payload = {
        "p": args.p,
        "n": f.n,
        "ones": f.ones(),
        "state": res.state.render(),
        "outcomes": outcomes,
        "zero_state_absent": zero_absent,
        "supernatural": res.supernatural,
        "condition": f"p | 2^n - 1 with n = {f.n}: {((1 << f.n) - 1)} mod {args.p} = {((1 << f.n) - 1) % args.p}",
    }
    text = "\n".join(
        [
            f"p={args.p}  n={f.n}  ones={','.join(f.ones()) or '-'}",
            f"state=({', '.join(payload['state'])})",
            f"outcomes={{{', '.join(outcomes)}}}",
            f"|0>|0..0> absent: {'yes' if zero_absent else 'no'}",
            f"supernatural: {'yes' if res.supernatural else 'no'}  ({payload['condition']})",
        ]
    )
    return payload, text


def cmd_dj_run(args):
    f = _load_oracle(args.oracle)
    ctx = _field(args.p)
    if not ctx.complexifiable:
        raise UsageError(f"p={args.p} is not 3 mod 4")
    exact = dj_final_state(f, INTEGERS)
    reduced = dj_final_state(f, ctx)
    try:
        decision = dj_decide(f, ctx)
    except PromiseViolation as exc:
        decision = f"promise-violation: {exc}"
    payload = {
        "p": args.p,
        "n": f.n,
        "integer_state": list(exact.amps),
        "state": reduced.render(),
        "decision": decision,
        "norm_sq": sum(a * a for a in exact.amps),
    }
    text = "\n".join(
        [
            f"p={args.p}  n={f.n}",
            f"integer state=({', '.join(str(a) for a in exact.amps)})  norm^2={payload['norm_sq']}",
            f"state mod p=({', '.join(payload['state'])})",
            f"decision: {decision}",
        ]
    )
    return payload, text


def _resources_text(est) -> str:
    return (
        f"n={est.n}  d={est.d}  max|amp|^2<={est.amp_sq_bound}  k>={est.k_bound}\n"
        f"k={est.k}  pi(k)={est.pi_k}  p={est.p if est.p is not None else 'not resolved within budget'}"
    )


def cmd_dj_resources(args):
    est = dj_resources(args.n, budget=args.budget, workers=args.workers)
    return est.as_dict(), _resources_text(est)


def cmd_grover_trace(args):
    if not 2 <= args.n <= CLI_MAX_BITS:
        raise UsageError(f"--n must be in 2..{CLI_MAX_BITS}")
    N = 1 << args.n
    ctx = _field(args.p) if args.p is not None else INTEGERS
    tr = grover_trace(N, args.target, ctx)
    lines = [f"N={N}  j={tr.j}  target={args.target}  mu={tr.mu}"]
    rows = [
        [l, a, b, w, tr.mus[l], tr.target_probs[l], tr.other_probs[l]]
        for l, ((a, b), w) in enumerate(zip(tr.raw, tr.weights))
    ]
    lines.append(_table(["step", "a", "b", "weight", "mu", "P(target)", "P(other)"], rows))
    return tr.as_dict(), "\n".join(lines)


def cmd_grover_resources(args):
    if not 2 <= args.n <= CLI_MAX_BITS:
        raise UsageError(f"--n must be in 2..{CLI_MAX_BITS}")
    est = grover_resources(1 << args.n, budget=args.budget, workers=args.workers)
    return est.as_dict(), _resources_text(est)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cmd_cardinal_rescale(args):
    states = [representative_state(m) for m in args.norms]
    if args.weights is not None:
        if len(args.weights) != len(states):
            raise UsageError("--weights needs one weight per norm")
        scaled = [ScaledState(s, w) for s, w in zip(states, args.weights)]
        target = None
    else:
        try:
            scaled = rescale_states(states, args.target, args.precision, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        target = args.target
    real = realize(scaled)
    ref = reference_probabilities(states)
    report = validate_realization(real, ref)
    payload = {
        "norms": args.norms,
        "target": target,
        "precision": args.precision,
        "states": [s.base.render() for s in scaled],
        "weights": [s.weight for s in scaled],
        "mu": list(real.scales),
        "probs": [list(p) for p in real.probs],
        "reference": [[_frac(x) for x in row] for row in ref],
        "report": {
            "preserved": len(report.preserved),
            "collapsed": [[list(a), list(b)] for a, b in report.collapsed],
            "reversed": [[list(a), list(b)] for a, b in report.reversed],
            "valid": report.valid,
            "strict": report.strict,
        },
    }
    rows = [
        [m, "(" + ", ".join(s.base.render()) + ")", s.weight, s.mu, "{" + ", ".join(map(str, p)) + "}",
         "{" + ", ".join(_frac(x) for x in r) + "}"]
        for m, s, p, r in zip(args.norms, scaled, real.probs, ref)
    ]
    lines = [_table(["m", "state", "x", "mu", "scaled probs", "exact probs"], rows)]
    lines.append(
        f"pairs: preserved={len(report.preserved)} collapsed={len(report.collapsed)} "
        f"reversed={len(report.reversed)}  verdict={report.verdict()}"
    )
    for a, b in report.collapsed:
        lines.append(f"  collapsed: P{a[0] + 1}({a[1]}) = P{b[0] + 1}({b[1]}) = {real.probs[a[0]][a[1]]}")
    for a, b in report.reversed:
        lines.append(
            f"  reversed: P{a[0] + 1}({a[1]})={real.probs[a[0]][a[1]]} > P{b[0] + 1}({b[1]})={real.probs[b[0]][b[1]]}"
        )
    return payload, "\n".join(lines)


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dqt", description="Discrete quantum theories over finite fields.")
    parser.add_argument("--version", action="version", version=f"dqt {__version__}")
    sub = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def common(p, search=False):
        p.add_argument("--json", action="store_true", help="emit JSON")
        if search:
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest candidate p")
            p.add_argument("--workers", type=int, default=default_workers())

    nt = sub.add_parser("nt", help="number theory").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = nt.add_parser("table", help="least primes with a given least non-residue")
    p.add_argument("--rows", type=int, default=10)
    common(p, search=True)
    p.set_defaults(func=cmd_nt_table)
    p = nt.add_parser("find-p", help="search A000229 for one k")
    p.add_argument("--k", type=int, required=True)
    common(p, search=True)
    p.set_defaults(func=cmd_nt_find_p)
    p = nt.add_parser("verify", help="check that k is the least non-residue of p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_nt_verify)

    p = sub.add_parser("amplitudes", help="allowed amplitude sets F^d(k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=_d_range, default=[1, 2, 3, 4, 5, 6], help="D or LO-HI")
    p.add_argument("--p", type=int, default=None, help="field (defaults to the least p for k)")
    common(p, search=True)
    p.set_defaults(func=cmd_amplitudes)

    modal = sub.add_parser("modal", help="modal theory over F_2").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = modal.add_parser("usat", help="UNIQUE-SAT circuit")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--oracle", help="oracle JSON file")
    src.add_argument("--exhaustive", type=int, metavar="N", help="all admissible oracles on N bits")
    p.add_argument("--sample", type=int, metavar="SEED", default=None,
                   help="pick one outcome uniformly (extrapolation: no distribution is defined)")
    common(p)
    p.set_defaults(func=cmd_modal_usat)

    dqc1 = sub.add_parser("dqc1", help="UNIQUE-SAT over F_{p^2}").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = dqc1.add_parser("usat")
    p.add_argument("--oracle", required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_dqc1_usat)

    dj = sub.add_parser("dj", help="Deutsch-Jozsa").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = dj.add_parser("run")
    p.add_argument("--oracle", required=True)
    p.add_argument("--p", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_dj_run)
    p = dj.add_parser("resources")
    p.add_argument("--n", type=int, required=True)
    common(p, search=True)
    p.set_defaults(func=cmd_dj_resources)

    gr = sub.add_parser("grover", help="Grover search").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = gr.add_parser("trace")
    p.add_argument("--n", type=int, required=True, help="qubits; N = 2^n")
    p.add_argument("--target", type=int, default=0)
    p.add_argument("--p", type=int, default=None, help="check the run fits this field")
    common(p)
    p.set_defaults(func=cmd_grover_trace)
    p = gr.add_parser("resources")
    p.add_argument("--n", type=int, required=True)
    common(p, search=True)
    p.set_defaults(func=cmd_grover_resources)

    card = sub.add_parser("cardinal", help="cardinal probability").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = card.add_parser("rescale")
    p.add_argument("--norms", type=_int_list, default=[1, 2, 3, 4])
    p.add_argument("--target", type=int, default=None, help="common norm (default lcm)")
    p.add_argument("--precision", type=int, default=0, help="extra decimal digits t")
    p.add_argument("--k", type=int, default=None, help="ordered range bound for sqrt' values")
    p.add_argument("--weights", type=_int_list, default=None, help="explicit weights instead of sqrt'")
    common(p)
    p.set_defaults(func=cmd_cardinal_rescale)
    return parser


def _command_name(args) -> str:
    return f"{args.group} {args.cmd}" if getattr(args, "cmd", None) else args.group


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute a command; returns (exit code, rendered report)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    name = _command_name(args)
    try:
        payload, text = args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    except RangeOverflowError as exc:
        return EXIT_RANGE, f"range overflow: {exc} (required k = {exc.required_k})"
    except BudgetExhausted as exc:
        return EXIT_BUDGET, f"budget exhausted: {exc}"
    except ValueError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    if args.json:
        doc = {"schema": f"dqt.{name.replace(' ', '.')}/v{SCHEMA_VERSION}", "command": ["dqt", *argv], **payload}
        return EXIT_OK, json.dumps(doc, sort_keys=True, indent=2)
    return EXIT_OK, f"# dqt {' '.join(argv)}\n{text}"


def main(argv: list[str] | None = None) -> int:
    code, out = run(argv)
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
