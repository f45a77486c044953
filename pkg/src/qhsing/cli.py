"""Command-line frontend.

Data goes to ``--out`` (or stdout) in one of two row formats; summaries and
counts go to stderr so the data stream stays clean for piping.

Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .bounds import check_degree_bound, l
from .conditions import check_gcd_condition, check_condition, Condition, SupportSet
from .enumeration import (
    BudgetExceeded,
    EnumerationRecord,
    _roman_key,
    charpoly_degree_matches,
    classify_prime_mu,
    chain_charpoly,
    chain_weight_system,
    enumerate_weight_systems,
    find_gaps,
    sum_weights_eq_d,
    sum_weights_eq_half_d,
)
from .graphs import enumerate_types, type_label
from .weights import (
    NegativeCoefficient,
    NotPolynomial,
    WeightSystem,
    charpoly_milnor_orlik,
    exponents,
    milnor_number,
    poincare_series,
)

__all__ = ["OutputRow", "main", "parse_rows", "emit_rows"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_INVARIANT = 3

CSV_FIELDS = ("n", "v", "d", "mu", "kappa_types", "charpoly", "reduced", "below_half")


class InvariantViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class OutputRow:
    n: int
    v: tuple[int, ...]
    d: int
    mu: int
    kappa_types: tuple[str, ...]
    charpoly: tuple[tuple[int, int], ...]
    reduced: bool
    below_half: bool

    @classmethod
    def from_record(cls, rec: EnumerationRecord) -> OutputRow:
        return cls(
            n=rec.n,
            v=rec.ws.v,
            d=rec.ws.d,
            mu=rec.mu,
            kappa_types=rec.kappa_types,
            charpoly=rec.charpoly.multiplicities,
            reduced=rec.ws.is_reduced,
            below_half=rec.ws.below_half,
        )

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "v": list(self.v),
            "d": self.d,
            "mu": self.mu,
            "kappa_types": list(self.kappa_types),
            "charpoly": [list(p) for p in self.charpoly],
            "reduced": self.reduced,
            "below_half": self.below_half,
        }
        return json.dumps(obj, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> OutputRow:
        obj = json.loads(line)
        return cls(
            n=int(obj["n"]),
            v=tuple(int(x) for x in obj["v"]),
            d=int(obj["d"]),
            mu=int(obj["mu"]),
            kappa_types=tuple(obj["kappa_types"]),
            charpoly=tuple((int(m), int(k)) for m, k in obj["charpoly"]),
            reduced=bool(obj["reduced"]),
            below_half=bool(obj["below_half"]),
        )

    def to_csv_fields(self) -> list[str]:
        return [
            str(self.n),
            " ".join(map(str, self.v)),
            str(self.d),
            str(self.mu),
            " ".join(self.kappa_types),
            ";".join(f"{m}:{k}" for m, k in self.charpoly),
            str(int(self.reduced)),
            str(int(self.below_half)),
        ]

    @classmethod
    def from_csv_fields(cls, row: dict[str, str]) -> OutputRow:
        cp = tuple(
            (int(m), int(k))
            for m, k in (item.split(":") for item in row["charpoly"].split(";") if item)
        )
        return cls(
            n=int(row["n"]),
            v=tuple(int(x) for x in row["v"].split()),
            d=int(row["d"]),
            mu=int(row["mu"]),
            kappa_types=tuple(row["kappa_types"].split()),
            charpoly=cp,
            reduced=row["reduced"] == "1",
            below_half=row["below_half"] == "1",
        )


def emit_rows(rows, fmt: str) -> str:
    """Serialize rows; the result ends with a newline unless there are no rows."""
    if fmt == "jsonl":
        return "".join(r.to_json() + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in rows:
            writer.writerow(r.to_csv_fields())
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def parse_rows(text: str, fmt: str) -> list[OutputRow]:
    if fmt == "jsonl":
        return [OutputRow.from_json(line) for line in text.splitlines() if line.strip()]
    if fmt == "csv":
        return [OutputRow.from_csv_fields(r) for r in csv.DictReader(io.StringIO(text))]
    raise ValueError(f"unknown format {fmt!r}")


def _write_atomic(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=target.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


# --- subcommands -----------------------------------------------------------


def cmd_check(args) -> int:
    *v, d = args.numbers
    ws = WeightSystem(tuple(v), d)
    mu = milnor_number(ws)
    is3 = check_condition(ws, SupportSet.full(), Condition.C1_PRIME)
    gcd_rep = check_gcd_condition(ws)
    out = [f"weight system: {ws}"]
    out.append(f"reduced: {str(ws.is_reduced).lower()}")
    out.append(f"IS3: {is3.describe()}")
    out.append(f"GCD: {gcd_rep.describe()}")
    try:
        rho = poincare_series(ws)
        out.append("rho in Z[t]: true")
        nonneg = all(c >= 0 for _, c in rho.terms())
        out.append(f"rho in N0[t]: {str(nonneg).lower()}")
    except NotPolynomial:
        rho = None
        out.append("rho in Z[t]: false")
        out.append("rho in N0[t]: false")
    out.append(f"mu={mu}")
    if rho is not None:
        try:
            out.append(f"exponent count: {len(exponents(ws))}")
        except NegativeCoefficient:
            pass
    if mu.denominator == 1 and is3.verdict:
        out.append(f"charpoly: {charpoly_milnor_orlik(ws)}")
    bound = check_degree_bound(ws)
    limit = l(ws.n - 1) if ws.n >= 2 and ws.below_half else l(ws.n)
    out.append(f"degree bound d <= {limit}*mu: {str(bound).lower()}")
    print("\n".join(out))
    return EXIT_OK


def _validate(records) -> None:
    for rec in records:
        if not charpoly_degree_matches(rec):
            raise InvariantViolation(f"{rec.ws}: charpoly degree differs from mu={rec.mu}")
        if not check_degree_bound(rec.ws):
            raise InvariantViolation(f"{rec.ws}: degree bound fails")
        if not rec.kappa_types:
            raise InvariantViolation(f"{rec.ws}: no kappa choice")


def cmd_enumerate(args) -> int:
    records = enumerate_weight_systems(
        args.n,
        args.mu_max,
        jobs=args.jobs,
        budget=args.budget,
        cache_dir=args.cache_dir,
        include_a1=args.include_a1,
    )
    _validate(records)
    if args.sum_weights_eq_d:
        records = [r for r in records if sum_weights_eq_d(r.ws)]
    if args.sum3_eq_half_d:
        records = [r for r in records if sum_weights_eq_half_d(r.ws)]
    rows = [OutputRow.from_record(r) for r in records]
    _write_atomic(args.out, emit_rows(rows, args.format))
    print(f"count: {len(rows)}", file=sys.stderr)
    return EXIT_OK


def cmd_gaps(args) -> int:
    rep = find_gaps(args.n, args.mu_max, jobs=args.jobs, budget=args.budget,
                    cache_dir=args.cache_dir)
    lines = []
    for g in rep.gaps:
        tag = "prime-pair" if rep.is_sophie_germain_type(g) else "other"
        lines.append(f"{g}\t{tag}")
    _write_atomic(args.out, "".join(x + "\n" for x in lines))
    print(f"gaps: {len(rep.gaps)}", file=sys.stderr)
    return EXIT_OK


def cmd_types(args) -> int:
    types = sorted(enumerate_types(args.n), key=lambda tc: _roman_key(type_label(tc)))
    lines = [f"{type_label(tc)}\t{' '.join(str(k + 1) for k in tc.representative)}"
             for tc in types]
    _write_atomic(args.out, "".join(x + "\n" for x in lines))
    print(f"types: {len(types)}", file=sys.stderr)
    return EXIT_OK


def cmd_chain(args) -> int:
    ws = chain_weight_system(args.exponents)
    mu = milnor_number(ws)
    cp = chain_charpoly(args.exponents)
    if cp != charpoly_milnor_orlik(ws):
        raise InvariantViolation(f"chain charpoly {cp} differs from {charpoly_milnor_orlik(ws)}")
    print(f"weight system: {ws.canonical()}")
    print(f"chain order: {ws}")
    print(f"mu={mu}")
    print(f"charpoly: {cp}")
    return EXIT_OK


def cmd_prime_audit(args) -> int:
    audit = classify_prime_mu(args.n, args.mu_max, jobs=args.jobs, budget=args.budget,
                              cache_dir=args.cache_dir)
    lines = []
    for mu in sorted(audit.chains):
        tuples = " ".join("(" + ",".join(map(str, t)) + ")" for t in audit.chains[mu])
        lines.append(f"{mu}\t{len(audit.chains[mu])}\t{tuples}")
    _write_atomic(args.out, "".join(x + "\n" for x in lines))
    for v in audit.violations:
        print(f"violation: {v}", file=sys.stderr)
    print(f"prime values: {len(audit.chains)}, violations: {len(audit.violations)}",
          file=sys.stderr)
    return EXIT_OK if audit.ok else EXIT_INVARIANT


# --- parser ----------------------------------------------------------------


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return val


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qhsing", description="Weight systems of quasihomogeneous isolated singularities.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def run_opts(sp, with_format=False):
        sp.add_argument("-n", type=_positive, required=True, help="number of variables")
        sp.add_argument("--mu-max", type=_positive, required=True, help="Milnor number bound")
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--jobs", type=_positive, default=1, help="worker processes")
        sp.add_argument("--budget", type=_positive, default=None, help="search node budget")
        sp.add_argument("--cache-dir", default=None, help="directory for resumable shards")
        if with_format:
            sp.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    sp = sub.add_parser("check", help="verdicts for one weight system")
    sp.add_argument("numbers", nargs="+", type=_positive, metavar="v_or_d",
                    help="weights followed by the degree")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("enumerate", help="all reduced systems up to a Milnor bound")
    run_opts(sp, with_format=True)
    sp.add_argument("--include-a1", action="store_true", help="add (1; 2) for n = 1")
    sp.add_argument("--sum-weights-eq-d", action="store_true", help="keep sum(v) = d")
    sp.add_argument("--sum3-eq-half-d", action="store_true", help="keep sum(v) = d/2")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("gaps", help="integers that are not Milnor numbers")
    run_opts(sp)
    sp.set_defaults(func=cmd_gaps)

    sp = sub.add_parser("types", help="kappa-map types")
    sp.add_argument("-n", type=_positive, required=True)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_types)

    sp = sub.add_parser("chain", help="weight system and charpoly of a chain")
    sp.add_argument("exponents", nargs="+", type=int, metavar="a")
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("prime-audit", help="chain tuples for prime Milnor numbers")
    run_opts(sp)
    sp.set_defaults(func=cmd_prime_audit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
