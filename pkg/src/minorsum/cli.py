"""Command-line front end.

Exit codes: 0 success or agreement, 1 a mathematical disagreement, 2 usage
or guard errors.  Random matrices come from numpy's PCG64 bit generator;
trial ``t`` of a run with ``--seed s`` is seeded with ``(s + t) mod 2**64``,
so any single trial can be regenerated on its own.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .algebra import format_rational
from .errors import DomainError, ResourceLimitError
from .integral import (
    MAX_ORACLE_K,
    convergence_table,
    iterated_integral_oracle,
    lhs_pfaffian,
    parse_exponents,
    rhs_product,
    tail_is_monotone,
)
from .linalg import Matrix, SkewMatrix, pfaffian_eliminate
from .okada import MAX_BRUTE_FORCE_SUBSETS, minor_sum_bruteforce, minor_sum_okada
from .symbolic import (
    MAX_SYMBOLIC_K,
    build_symbolic_matrix,
    reduced_matrix,
    reduction_check,
    symbolic_pfaffian,
    product_formula,
    verify_identity,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
SEED_MODULUS = 2**64


class UsageError(Exception):
    pass


def random_integer_matrix(n: int, k: int, max_entry: int, seed: int) -> Matrix:
    rng = np.random.Generator(np.random.PCG64(seed % SEED_MODULUS))
    values = rng.integers(-max_entry, max_entry, size=(n, k), endpoint=True)
    return Matrix(([int(v) for v in row] for row in values), cols=k)


def _emit(out, fmt: str, record: dict, columns: list[str]) -> None:
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write("\t".join(str(record[c]).lower() if isinstance(record[c], bool)
                            else str(record[c]) for c in columns) + "\n")


def cmd_verify(args, out) -> int:
    n, k, trials, max_entry = args.n, args.k, args.trials, args.max_entry
    if k < 1 or n < 0 or trials < 0 or max_entry < 0:
        raise UsageError("need k >= 1, n >= 0, trials >= 0, max-entry >= 0")
    subsets = math.comb(n, k) if k <= n else 0
    if subsets > MAX_BRUTE_FORCE_SUBSETS:
        raise UsageError(f"C({n},{k}) = {subsets} exceeds the brute-force guard "
                         f"{MAX_BRUTE_FORCE_SUBSETS}")
    columns = ["n", "k", "seed", "okada", "brute", "match"]
    if args.format == "tsv":
        out.write("\t".join(columns) + "\n")
    ok = True
    for t in range(trials):
        seed = (args.seed + t) % SEED_MODULUS
        C = random_integer_matrix(n, k, max_entry, seed)
        okada = minor_sum_okada(C).value
        brute = minor_sum_bruteforce(C).value
        match = okada == brute
        ok &= match
        _emit(out, args.format, {"n": n, "k": k, "seed": seed,
                                 "okada": format_rational(okada),
                                 "brute": format_rational(brute), "match": match},
              columns)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_integral(args, out) -> int:
    a = parse_exponents(args.exponents)
    value = rhs_product(a)
    record = {"exponents": [format_rational(x) for x in a],
              "value": format_rational(value)}
    agree = True
    if args.check:
        checks = {"rhs_product": value, "lhs_pfaffian": lhs_pfaffian(a)}
        if len(a) <= min(6, MAX_ORACLE_K):
            checks["iterated_oracle"] = iterated_integral_oracle(a)
        agree = all(v == value for v in checks.values())
        record["checks"] = {name: format_rational(v) for name, v in checks.items()}
        record["agree"] = agree
    if args.format == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(record["value"] + "\n")
        if args.check:
            for name, v in record["checks"].items():
                out.write(f"{name}\t{v}\n")
            out.write(f"agree\t{str(agree).lower()}\n")
    return EXIT_OK if agree else EXIT_MISMATCH


def _parse_grid(text: str) -> list[int]:
    try:
        grid = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"grid must be comma-separated integers: {text!r}") from None
    if not grid or any(n < 1 for n in grid) or any(m >= n for m, n in zip(grid, grid[1:])):
        raise UsageError("grid must be a nonempty strictly increasing list of positive integers")
    return grid


def cmd_converge(args, out) -> int:
    a = parse_exponents(args.exponents)
    grid = _parse_grid(args.grid)
    if grid[0] < len(a):
        raise UsageError(f"grid values must be at least k = {len(a)}")
    rows = convergence_table(a, grid)
    if args.format == "json":
        out.write(json.dumps([r.as_dict() for r in rows]) + "\n")
    else:
        out.write("n\tapprox\texact\tabs_error\n")
        for r in rows:
            out.write(f"{r.n}\t{r.approx!r}\t{format_rational(r.exact)}\t{r.abs_error!r}\n")
    if not tail_is_monotone(rows):
        sys.stderr.write("note: error grew between the last two grid points\n")
    return EXIT_OK


def cmd_pfaffian(args, out) -> int:
    try:
        M = Matrix.from_json(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read matrix: {exc}") from None
    if not M.is_square():
        raise UsageError(f"matrix must be square, got {M.rows}x{M.cols}")
    if M.rows % 2:
        raise UsageError(f"the Pfaffian needs an even dimension; got dimension {M.rows}")
    S = SkewMatrix(M.tolist())
    value = pfaffian_eliminate(S)
    if args.format == "json":
        out.write(json.dumps({"dim": S.dim, "pfaffian": format_rational(value)}) + "\n")
    else:
        out.write(format_rational(value) + "\n")
    return EXIT_OK


def cmd_symbolic(args, out) -> int:
    k = args.k
    if not 1 <= k <= MAX_SYMBOLIC_K:
        raise UsageError(f"k must be in 1..{MAX_SYMBOLIC_K}, got {k}")
    identity = verify_identity(k)
    reduction = reduction_check(k) if k >= 2 else True
    if identity and reduction:
        out.write(f"OK k={k}\n")
    else:
        out.write(f"MISMATCH k={k} identity={identity} reduction={reduction}\n")
    if args.show or not (identity and reduction):
        M = build_symbolic_matrix(k)
        out.write(f"{M}\n")
        out.write(f"pfaffian: {symbolic_pfaffian(M)}\n")
        out.write(f"product:  {product_formula(k)}\n")
        if k >= 2:
            R = reduced_matrix(k)
            target = build_symbolic_matrix(k - 1)
            out.write("reduced:\n")
            for i in range(R.dim):
                for j in range(i + 1, R.dim):
                    out.write(f"  [{i},{j}] {R[i, j]}  vs  {target.entries[i, j]}\n")
    return EXIT_OK if identity and reduction else EXIT_MISMATCH


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < SEED_MODULUS:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_u64, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="minorsum",
        description="Minor sums, Pfaffians and the simplex integral of det(x_i^(a_j-1)).",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="compare the Pfaffian minor sum with brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--max-entry", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("integral", parents=[common], help="exact value of the simplex integral")
    p.add_argument("--exponents", required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("converge", parents=[common], help="Riemann-sum convergence table")
    p.add_argument("--exponents", required=True)
    p.add_argument("--grid", required=True)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("pfaffian", parents=[common], help="exact Pfaffian of a JSON matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("symbolic", parents=[common], help="symbolic identity check for one k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--show", action="store_true")
    p.set_defaults(func=cmd_symbolic)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "seed"):
        args.seed = 0
    if not hasattr(args, "format"):
        args.format = "json" if args.command in ("verify", "converge") else "tsv"
    try:
        return args.func(args, out)
    except (UsageError, DomainError, ResourceLimitError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"minorsum {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
