"""Command-line front end; plain-text output is layout-stable so it can be
diffed against golden files, --json emits the machine form.

Exit codes: 0 success/pass, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, codewords, ecc_sim, family, oracle, pauli, stabilizer

MAX_TEXT_QUBITS = 64  # generator listings above this go to --out / --json only
MAX_GRID_QUBITS = 32  # same for the per-qubit syndrome grid


def _err(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _syndrome_grid(assignment: family.NumberAssignment) -> str:
    lines = []
    n = assignment.n
    for start in range(1, n + 1, 4):
        block = range(start, min(start + 4, n + 1))
        for letter, values in (("X", assignment.fx), ("Z", assignment.fz), ("Y", assignment.fy)):
            lines.append(
                "  ".join(f"{letter}_{i} {assignment.as_string(int(values[i - 1]))}" for i in block)
            )
        lines.append("")
    return "\n".join(lines).rstrip("\n")


def _operator_rows(prefix: str, ops) -> str:
    ops = list(ops)
    width = len(f"{prefix}_{len(ops)}")
    return "\n".join(
        f"{f'{prefix}_{idx}':<{width}}  {pauli.format(op)}" for idx, op in enumerate(ops, 1)
    )


def _codeword_listing(states) -> str:
    lines = []
    for i, state in enumerate(states):
        parts = []
        for row in state.to_rows():
            sign = "+" if row["coeff"] > 0 else "-"
            parts.append(f"{sign}|{row['label']}>")
        lines.append(f"psi_{i} = " + " ".join(parts))
    return "\n".join(lines)


def cmd_family(args) -> int:
    if not family.MIN_J <= args.j <= family.MAX_J:
        _err(f"--j must lie in [{family.MIN_J}, {family.MAX_J}]")
        return 2
    if args.emit == "codewords" and (1 << args.j) > oracle.MAX_QUBITS:
        _err(f"--emit codewords requires n <= {oracle.MAX_QUBITS}")
        return 2
    code = family.build_code(args.j)
    if args.out:
        code.save(args.out)
    if args.json:
        print(json.dumps(code.to_json_dict(), indent=2))
    else:
        assignment = family.assign_numbers(args.j)
        print(f"family code j={args.j}: n={code.n}, k={code.k}, a={args.j + 2}")
        print()
        if code.n <= MAX_GRID_QUBITS:
            print("single-qubit error syndromes f(X_i), f(Z_i), f(Y_i):")
            print(_syndrome_grid(assignment))
            print()
        if code.n <= MAX_TEXT_QUBITS:
            print("generators:")
            print(_operator_rows("M", code.generators))
            print()
            print("seed generators:")
            print(_operator_rows("N", code.seed_generators))
        else:
            print(f"(n={code.n}: use --out or --json for the generator listing)")
        if args.out:
            print()
            print(f"wrote {args.out}")
    if args.emit == "codewords":
        group = code.group()
        states = codewords.basis(group, code.seed_generators)
        print()
        print("code words:")
        print(_codeword_listing(states))
    return 0


def cmd_verify(args) -> int:
    try:
        code = family.CodeSpec.load(args.code)
    except (OSError, ValueError) as exc:
        _err(str(exc))
        return 2

    failures = []
    lines = [f"code: n={code.n}, k={code.k}, a={len(code.generators)}"]
    group = None
    try:
        group = stabilizer.validate(code.n, code.generators)
        lines.append("validate: ok")
    except stabilizer.StabilizerValidationError as exc:
        lines.append(f"validate: FAIL ({exc})")
        failures.append("validate")

    if group is not None:
        report = stabilizer.check_correctability(group, args.t)
        if report.ok:
            lines.append(
                f"correctability t={args.t}: ok "
                f"({report.distinct_syndromes} distinct syndromes over {report.total_errors} errors)"
            )
        else:
            first, second = report.collision
            lines.append(
                f"correctability t={args.t}: FAIL "
                f"({first} and {second} share syndrome {stabilizer.syndrome(group, first)})"
            )
            failures.append("correctability")

        seed_problems = codewords.check_seeds(group, code.seed_generators)
        if seed_problems:
            lines.append(f"seed generators: FAIL ({'; '.join(seed_problems)})")
            failures.append("seeds")
        else:
            lines.append("seed generators: ok")

    oracle_report = None
    if args.oracle and group is not None and not failures:
        if code.n > oracle.MAX_QUBITS:
            lines.append(f"oracle: skipped (n={code.n} exceeds cap {oracle.MAX_QUBITS})")
        else:
            oracle_report = oracle.verify_code(code, args.t)
            lines.append(str(oracle_report))
            if not oracle_report.ok:
                failures.append("oracle")

    ok = not failures
    lines.append("result: PASS" if ok else "result: FAIL")
    if args.json:
        payload = {
            "n": code.n,
            "k": code.k,
            "t": args.t,
            "ok": ok,
            "failures": failures,
        }
        if oracle_report is not None:
            payload["oracle"] = {
                "rank": oracle_report.rank,
                "num_vectors": oracle_report.num_vectors,
                "dimension": oracle_report.dimension,
            }
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return 0 if ok else 1


def cmd_bound(args) -> int:
    rows = bounds.qhb_table(args.max_n, args.t)
    if args.json:
        print(json.dumps([{"n": n, "t": args.t, "max_k": k} for n, k in rows], indent=2))
    else:
        print(f"quantum Hamming bound: maximum k for t={args.t} (-1 means no code)")
        width = max(len(str(args.max_n)), 2)
        print(f"{'n':>{width}}  max_k")
        for n, k in rows:
            print(f"{n:>{width}}  {k}")
    return 0


def cmd_degenerate_bound(args) -> int:
    if args.n < 2:
        _err("--n must be at least 2")
        return 2
    rows = [(l, bounds.degenerate_max_k(args.n, l)) for l in range(args.n)]
    holds, witness = bounds.degenerate_never_beats_qhb(args.n)
    qhb = bounds.qhb_max_k(args.n, 1)
    if args.json:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "qhb_max_k": qhb,
                    "rows": [{"n": args.n, "l": l, "max_k": k} for l, k in rows],
                    "never_beats_qhb": holds,
                    "witness_l": witness,
                },
                indent=2,
            )
        )
    else:
        print(f"degenerate-code bound for n={args.n} (t=1); quantum Hamming bound k={qhb}")
        width = max(len(str(args.n - 1)), 2)
        print(f"{'l':>{width}}  max_k")
        for l, k in rows:
            print(f"{l:>{width}}  {k}")
        verdict = "yes" if holds else "NO"
        print(f"never beats quantum Hamming bound: {verdict} (max at l={witness})")
    return 0 if holds else 1


def cmd_syndrome(args) -> int:
    try:
        code = family.CodeSpec.load(args.code)
        err = pauli.parse(args.error)
    except (OSError, ValueError) as exc:
        _err(str(exc))
        return 2
    if err.n != code.n:
        _err(f"error acts on {err.n} qubits, code has {code.n}")
        return 2
    group = code.group()
    syn = stabilizer.syndrome(group, err)
    if args.json:
        print(json.dumps({"error": pauli.format(err), "syndrome": str(syn)}, indent=2))
    else:
        print(f"error: {pauli.format(err)}")
        print(f"syndrome: {syn}")
    return 0


def cmd_simulate(args) -> int:
    try:
        code = family.CodeSpec.load(args.code)
    except (OSError, ValueError) as exc:
        _err(str(exc))
        return 2
    try:
        stats = ecc_sim.run_campaign(code, args.model, args.trials, args.seed)
    except ValueError as exc:
        _err(str(exc))
        return 2
    if args.json:
        print(stats.to_json())
    else:
        print(f"model: {stats.model}")
        print(f"seed: {stats.seed}")
        print(f"trials: {stats.trials}")
        print(f"successes: {stats.successes}")
        print(f"success rate: {stats.success_rate:.6f}")
        print(f"min fidelity: {stats.min_fidelity:.12f}")
        print("syndrome histogram:")
        for key in sorted(stats.syndrome_histogram):
            print(f"  {key}: {stats.syndrome_histogram[key]}")
    return 0


BOUND_TABLE_MAX_N = 13


def _tables_text() -> str:
    assignment = family.assign_numbers(3)
    code = family.build_code(3)
    lines = []
    lines.append("single-qubit error syndromes f(X_i), f(Z_i), f(Y_i) for n=8:")
    lines.append(_syndrome_grid(assignment))
    lines.append("")
    lines.append("generators and seed generators for n=8:")
    lines.append(_operator_rows("M", code.generators))
    lines.append(_operator_rows("N", code.seed_generators))
    lines.append("")
    lines.append("maximum k allowed by the quantum Hamming bound (t=1):")
    lines.append(" n  k")
    for n, k in bounds.qhb_table(BOUND_TABLE_MAX_N, 1):
        if n >= 5:
            lines.append(f"{n:>2}  {k}")
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> int:
    if args.json:
        assignment = family.assign_numbers(3)
        code = family.build_code(3)
        payload = {
            "syndromes": {
                "fx": [assignment.as_string(assignment.f_x(i)) for i in range(1, 9)],
                "fz": [assignment.as_string(assignment.f_z(i)) for i in range(1, 9)],
                "fy": [assignment.as_string(assignment.f_y(i)) for i in range(1, 9)],
            },
            "code": {
                "generators": [pauli.format(g) for g in code.generators],
                "seed_generators": [pauli.format(g) for g in code.seed_generators],
            },
            "bound": [
                {"n": n, "max_k": k} for n, k in bounds.qhb_table(BOUND_TABLE_MAX_N, 1) if n >= 5
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(_tables_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabforge",
        description="construct, verify and simulate stabilizer error-correcting codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="build a code from the 2^j family")
    p.add_argument("--j", type=int, required=True, help="exponent, n = 2^j (3..16)")
    p.add_argument("--emit", choices=["codewords"], help="also print the code words (n <= 12)")
    p.add_argument("--out", help="write the code spec JSON to this path")
    p.add_argument("--json", action="store_true", help="print the code spec JSON")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check a code spec file")
    p.add_argument("code", help="code spec JSON path")
    p.add_argument("--t", type=int, default=1, help="error weight to verify (default 1)")
    p.add_argument("--oracle", action="store_true", help="also run the dense oracle (n <= 12)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="quantum Hamming bound table")
    p.add_argument("--max-n", type=int, default=13)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("degenerate-bound", help="degenerate-code bound by condition count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_degenerate_bound)

    p = sub.add_parser("syndrome", help="syndrome of a Pauli error against a code")
    p.add_argument("code", help="code spec JSON path")
    p.add_argument("--error", required=True, help="Pauli string, e.g. +XIIIIIII")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_syndrome)

    p = sub.add_parser("simulate", help="run error-correction trials")
    p.add_argument("code", help="code spec JSON path")
    p.add_argument(
        "--model",
        required=True,
        help="exhaustive | pauli:STR | matrix:a,b,c,d@i | depolarizing:p",
    )
    p.add_argument("--trials", type=int, default=100)
    p.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("STABFORGE_SEED", "0")),
        help="master seed (default: STABFORGE_SEED or 0)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("tables", help="print the reference tables")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
