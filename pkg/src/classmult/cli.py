"""Command-line front end.

    classmult scan alt 3 50 --format csv
    classmult family 1 --n 38
    classmult oracle power --psl2 7
    classmult numbers growth 2 1 100

Exit codes: 0 ok, 2 precondition/range error, 3 cap breach, 4 parse error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Iterator, Optional, TextIO

from . import serialize as ser
from .family import (
    BelowThresholdError,
    build_family,
    equal_class_family,
    family_params,
    verify_family,
)
from .numtheory import factorial_factorization, growth_table, totient_bound_check
from .oracle import (
    DEFAULT_CAP,
    CapExceeded,
    GeneratorParseError,
    PermGroup,
    alternating_group,
    centralizer_order_of,
    close_group,
    conjugacy_classes,
    multiplicity_report_oracle,
    parse_generators,
    power_conjugacy,
    psl2_group,
    symmetric_group,
)
from .symalt import MultiplicityReport, multiplicity_report

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_CAP = 3
EXIT_PARSE = 4

SCAN_MAX_N = 60
FAMILY_MAX_K = 11


class UsageError(ValueError):
    pass


def _report_for(args: tuple[str, int]) -> MultiplicityReport:
    return multiplicity_report(*args)


def iter_scan(kind: str, n_from: int, n_to: int, jobs: int = 1) -> Iterator[tuple[int, MultiplicityReport]]:
    """Reports for n_from..n_to in ascending n, computed lazily."""
    ns = range(n_from, n_to + 1)
    if jobs <= 1:
        for n in ns:
            yield n, multiplicity_report(kind, n)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from zip(ns, pool.map(_report_for, [(kind, n) for n in ns]))


def cmd_scan(args: argparse.Namespace, out: TextIO) -> None:
    if args.n_from < 1:
        raise UsageError("n_from must be >= 1")
    if args.n_from > args.n_to:
        raise UsageError(f"empty range {args.n_from}..{args.n_to}")
    if args.n_to > SCAN_MAX_N and not args.override_range:
        raise UsageError(f"n_to={args.n_to} exceeds {SCAN_MAX_N}; pass --override-range")
    params = {"group_kind": args.kind, "n_from": args.n_from, "n_to": args.n_to}
    if args.format == "csv":
        out.write(ser.csv_text(ser.SCAN_CSV_HEADER, []))
    for n, rep in iter_scan(args.kind, args.n_from, args.n_to, args.jobs):
        if args.format == "csv":
            out.write(",".join(ser.scan_csv_row(n, rep)) + "\n")
        else:
            out.write(ser.dumps(ser.envelope("scan", params, ser.scan_payload(n, rep))) + "\n")
        out.flush()


def cmd_family(args: argparse.Namespace, out: TextIO) -> None:
    M, n = args.M, args.n
    if M < 1:
        raise UsageError("M must be >= 1")
    params = family_params(M)
    if params.k > FAMILY_MAX_K and not args.override_range:
        raise UsageError(f"M={M} needs k={params.k} (2^{params.k + 1} members); pass --override-range")
    payload: dict[str, Any] = {"params": ser.params_payload(params)}
    rows: list[list[str]] = []
    if n is None:
        verifications = {}
        for branch in ("P", "P_prime"):
            members = build_family(params.k, branch)
            verifications[branch] = ser.verification_payload(verify_family(members))
            rows += [[branch, m.word, " ".join(map(str, m.partition.parts)), str(m.certified_centralizer), ""]
                     for m in members]
        payload["verification"] = verifications
    else:
        records = equal_class_family(n, M)  # raises below threshold
        branch = "P" if n % 2 == 0 else "P_prime"
        members = build_family(params.k, branch)
        verification = verify_family(members, n)
        lead = n - members[0].partition.size
        payload.update(
            n=n,
            branch=branch,
            member_count=len(members),
            common_class_size=str(records[0].class_size),
            members=[ser.member_payload(m, lead, r.class_size) for m, r in zip(members, records)],
            verification=ser.verification_payload(verification),
        )
        rows = [[branch, m.word, " ".join(map(str, r.rep.parts)), str(lead * m.certified_centralizer),
                 str(r.class_size)] for m, r in zip(members, records)]
    if args.format == "csv":
        out.write(ser.csv_text(["branch", "word", "partition", "centralizer", "alt_class_size"], rows))
    else:
        out.write(ser.dumps(ser.envelope("family", {"M": M, "n": n}, payload)) + "\n")


def _load_group(args: argparse.Namespace) -> tuple[PermGroup, dict[str, Any]]:
    sources = [s for s in ("gens", "psl2", "sym", "alt") if getattr(args, s) is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --gens, --psl2, --sym, --alt")
    src = sources[0]
    if src == "gens":
        path = Path(args.gens)
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
        gens, degree = parse_generators(text, args.degree)
        G = close_group(gens, args.cap, degree=degree, name=path.name)
        return G, {"gens": path.name, "degree": degree}
    value = getattr(args, src)
    if src == "psl2":
        G = psl2_group(value, args.cap)
    elif src == "sym":
        G = symmetric_group(value, args.cap)
    else:
        G = alternating_group(value, args.cap)
    return G, {src: value}


def cmd_oracle(args: argparse.Namespace, out: TextIO) -> None:
    G, params = _load_group(args)
    params["action"] = args.action
    if args.element_index is not None:
        params["element_index"] = args.element_index
    payload: dict[str, Any] = {"group": G.name, "degree": G.degree, "order": str(G.order)}
    header: list[str]
    rows: list[list[str]]
    if args.action == "classes":
        classes = [ser.class_record_payload(G, r) for r in conjugacy_classes(G)]
        payload["classes"] = classes
        header = ["rep", "size", "centralizer"]
        rows = [[c["rep"], c["size"], c["centralizer"]] for c in classes]
    elif args.action == "report":
        rep = multiplicity_report_oracle(G)
        payload["report"] = ser.report_payload(rep)
        header = ["size", "count"]
        rows = [[str(s), str(c)] for s, c in rep.histogram.items()]
    else:
        if args.element_index is not None:
            if not 0 <= args.element_index < G.order:
                raise UsageError(f"element index {args.element_index} outside 0..{G.order - 1}")
            targets = [G.elements[args.element_index]]
        else:
            targets = [r.rep for r in conjugacy_classes(G)]
        results = [ser.power_payload(x, power_conjugacy(G, x), centralizer_order_of(G, x)) for x in targets]
        payload["power"] = results
        header = ["element", "order", "conj_power_count", "equal_size_class_lower_bound", "centralizer"]
        rows = [[str(r[h]) for h in header] for r in results]
    if args.format == "csv":
        out.write(ser.csv_text(header, rows))
    else:
        out.write(ser.dumps(ser.envelope("oracle", params, payload)) + "\n")


def cmd_numbers(args: argparse.Namespace, out: TextIO) -> None:
    action = args.action
    if action == "totient-check":
        if args.k_max < 1:
            raise UsageError("k_max must be >= 1")
        scan = totient_bound_check(args.k_max)
        params: dict[str, Any] = {"action": action, "k_max": args.k_max}
        payload = ser.totient_payload(scan)
        header = ["k", "kind"]
        rows = sorted([[str(k), "boundary"] for k in scan.boundary] + [[str(k), "violation"] for k in scan.violations],
                      key=lambda r: int(r[0]))
    elif action == "dfact":
        if args.n < 0:
            raise UsageError("n must be >= 0")
        fact = factorial_factorization(args.n)
        params = {"action": action, "n": args.n}
        payload = ser.dfact_payload(fact)
        header = ["n", "divisor_count"]
        rows = [[str(args.n), payload["divisor_count"]]]
    else:
        if args.k_max < 1:
            raise UsageError("k_max must be >= 1")
        table = growth_table(args.a, args.c, args.k_max)
        params = {"action": action, "a": args.a, "c": args.c, "k_max": args.k_max}
        payload = ser.growth_payload(table)
        header = ["k", "ratio"]
        rows = [[str(r["k"]), r["ratio"]] for r in payload["rows"]]
    if args.format == "csv":
        out.write(ser.csv_text(header, rows))
    else:
        out.write(ser.dumps(ser.envelope("numbers", params, payload)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order for closures")
    common.add_argument("--override-range", action="store_true", help="lift the size guards")
    common.add_argument("--seed", type=int, default=None, help="reserved; no command is randomized")

    parser = argparse.ArgumentParser(prog="classmult", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", parents=[common], help="class-size multiplicity of S_n or A_n over a range of n")
    p.add_argument("kind", choices=["sym", "alt"])
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes; output order is unaffected")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", parents=[common], help="equal-size A_n class family for multiplicity M")
    p.add_argument("M", type=int)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("oracle", parents=[common], help="brute-force a permutation group")
    p.add_argument("action", choices=["classes", "report", "power"])
    p.add_argument("--gens", help="file with one permutation per line in cycle notation")
    p.add_argument("--degree", type=int, default=None, help="degree for --gens (default: inferred)")
    p.add_argument("--psl2", type=int, default=None, metavar="P")
    p.add_argument("--sym", type=int, default=None, metavar="N")
    p.add_argument("--alt", type=int, default=None, metavar="N")
    p.add_argument("--element-index", type=int, default=None,
                   help="index into the sorted element list (power action); default: every class rep")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("numbers", help="number-theory tables")
    nsub = p.add_subparsers(dest="action", required=True)
    q = nsub.add_parser("totient-check", parents=[common])
    q.add_argument("k_max", type=int)
    q = nsub.add_parser("dfact", parents=[common])
    q.add_argument("n", type=int)
    q = nsub.add_parser("growth", parents=[common])
    q.add_argument("a")
    q.add_argument("c")
    q.add_argument("k_max", type=int)
    p.set_defaults(func=cmd_numbers)
    return parser


def main(argv: Optional[list[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except GeneratorParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except CapExceeded as exc:
        err.write(f"cap breach: {exc}\n")
        return EXIT_CAP
    except BelowThresholdError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
