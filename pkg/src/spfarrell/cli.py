"""Command line front end.

    spfarrell --p 7 --n 203 --format json --oracle

Exit codes: 0 success, 2 usage or precondition error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, replace

from . import cohomology, splitting
from . import oracle as brute
from .fieldlin import check_odd_prime, primitive_roots_of_unity

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


@dataclass(frozen=True)
class RunConfig:
    p: int
    n: int | None = None
    factors: str | None = None
    j_filter: int | None = None
    format: str = "text"
    oracle: bool = False
    max_oracle_dim: int = brute.DEFAULT_GUARD
    mu_index: int = 0


class UsageError(ValueError):
    pass


def _resolve(config: RunConfig):
    try:
        check_odd_prime(config.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ctx = splitting.PrimeContext.from_prime(config.p)
    if (config.n is None) == (config.factors is None):
        raise UsageError("give exactly one of --n and --factors")
    try:
        if config.factors is not None:
            factors = splitting.parse_factors(config.factors)
            n = splitting.product(factors)
        else:
            n = config.n
            factors = splitting.factorize(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if n % config.p:
        raise UsageError(f"p = {config.p} does not divide n = {n}")
    if config.j_filter is not None and (
        config.j_filter < 1 or config.j_filter % 2 == 0 or ctx.y % config.j_filter
    ):
        raise UsageError(f"--j {config.j_filter} is not an odd divisor of y = {ctx.y}")
    return ctx, factors, n


def verify(report: cohomology.GlobalReport, config: RunConfig, err=None):
    """Re-derive every factor's table by brute force.

    Returns the report with ``oracle_checked`` filled in, plus one verdict
    line per factor and whether all attempted checks matched.
    """
    err = err or sys.stderr
    checked = []
    verdicts = []
    ok = True
    for f in report.factors:
        if f.orbit.dim > config.max_oracle_dim:
            msg = f"j={f.j}: oracle skipped (dim E = {f.orbit.dim} > {config.max_oracle_dim})"
            print(msg, file=err)
            verdicts.append(msg)
            checked.append(f)
            continue
        roots = primitive_roots_of_unity(f.j, report.p)
        mu = roots[config.mu_index % len(roots)]
        table = brute.invariant_dims_bruteforce(
            f.orbit.pairs, report.p, f.j, mu, guard=config.max_oracle_dim
        )
        if table.dims != f.dims.dims:
            ok = False
            msg = f"j={f.j}: MISMATCH formula {f.dims.as_list()} vs oracle {table.as_list()} (mu={mu})"
            print(msg, file=err)
            verdicts.append(msg)
            checked.append(f)
        else:
            verdicts.append(f"j={f.j}: oracle agrees")
            checked.append(replace(f, oracle_checked=True))
    return replace(report, factors=tuple(checked)), verdicts, ok


def render_json(report: cohomology.GlobalReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def render_text(report: cohomology.GlobalReport, verdicts=()) -> str:
    d = report.to_dict()
    cen = d["centralizer"]
    lines = [
        f"p = {d['p']}   n = {d['n']}   y = {d['y']}",
        f"sigma = {d['sigma']}   sigma_plus = {d['sigma_plus']}",
        f"centralizer: Z/{cen['torsion_order']}Z x Z^{cen['free_rank']}",
        "assumptions:",
    ]
    lines += [f"  - {a}" for a in d["assumptions"]]
    for f in d["factors"]:
        pairs = " ".join(f"({c},{dd})" for c, dd in f["pairs"])
        width = max(len(str(x)) for x in f["dims"] + [len(f["dims"]) - 1])
        lines += [
            "",
            f"factor j = {f['j']}   cycles (c,d): {pairs}",
            "  degree i : " + " ".join(str(i).rjust(width) for i in range(len(f["dims"]))),
            "  dim      : " + " ".join(str(x).rjust(width) for x in f["dims"]),
            f"  b_j = {f['b_j']}   oracle_checked = {str(f['oracle_checked']).lower()}",
        ]
    lines += [
        "",
        f"iso_step b = {d['iso_step']}",
        f"p_period = {d['p_period']}",
    ]
    if verdicts:
        lines += ["", "oracle:"] + [f"  {v}" for v in verdicts]
    return "\n".join(lines) + "\n"


def run(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        ctx, factors, n = _resolve(config)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    try:
        rep = cohomology.report(ctx, factors, config.j_filter, n=n)
    except cohomology.InternalInconsistencyError as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_MISMATCH
    verdicts: list[str] = []
    ok = True
    if config.oracle:
        rep, verdicts, ok = verify(rep, config, err)
    if config.format == "json":
        out.write(render_json(rep))
    else:
        out.write(render_text(rep, verdicts))
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spfarrell",
        description="p-primary Farrell cohomology of Sp(p-1, Z[1/n]), factor by factor.",
    )
    parser.add_argument("--p", type=int, required=True, help="odd prime p")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="nonzero integer n, divisible by p")
    group.add_argument("--factors", help='prime factors of n, e.g. "7:1,29:1"')
    parser.add_argument("--j", type=int, dest="j_filter", help="only report this odd j | y")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    parser.add_argument("--max-oracle-dim", type=int, default=brute.DEFAULT_GUARD)
    parser.add_argument(
        "--mu-index", type=int, default=0,
        help="which primitive j-th root the oracle uses (index into the ascending list)",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config = RunConfig(
        p=args.p,
        n=args.n,
        factors=args.factors,
        j_filter=args.j_filter,
        format=args.format,
        oracle=args.oracle,
        max_oracle_dim=args.max_oracle_dim,
        mu_index=args.mu_index,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
