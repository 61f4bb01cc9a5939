"""Command-line front end.

Exit codes: 0 success, 1 an identity or bijection check failed, 2 usage or
precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Callable, Iterator, Sequence

from . import identities as ids
from .bijections import (
    FamilySelector,
    glaisher_d_forward,
    glaisher_d_inverse,
    thm3_inverse,
    thm3_map,
    thm5_inverse,
    thm5_map,
    verify_bijection,
)
from .bitmatrix import encode, render_family
from .partition import (
    ALL,
    DISTINCT,
    ODD,
    ClassPredicate,
    DomainError,
    class_part_stats,
    format_partition,
    gen_partitions,
    parse_partition,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _odd_stats(n: int) -> tuple[int, int]:
    return class_part_stats(n, ODD)


COLUMNS: dict[str, Callable[[int], int]] = {
    "a": ids.a_exactly_one_even,
    "a1": ids.a1_one_triple,
    "f": ids.f_one_quintuple,
    "total_parts_odd": lambda n: _odd_stats(n)[0],
    "total_parts_distinct": lambda n: class_part_stats(n, DISTINCT)[0],
    "total_distinct_parts_odd": lambda n: _odd_stats(n)[1],
    "parts_G": ids.parts_G,
    "distinct_parts_H": ids.distinct_parts_H,
}

CLASSES: dict[str, ClassPredicate] = {
    "all": ALL,
    "odd": ODD,
    "distinct": DISTINCT,
    "G": ids.G,
    "H": ids.H,
    "one-even": ids.ONE_EVEN,
    "one-triple": ids.ONE_TRIPLE,
    "one-quintuple": ids.ONE_QUINTUPLE,
}

DEFAULT_MAX_N = {1: 45, 2: 45, 3: 35, 4: 40, 5: 35, 6: 45}

SELECTORS: dict[str, Callable[[int], FamilySelector]] = {
    "identity": lambda p: FamilySelector.identity(),
    "transpose": FamilySelector.transpose,
    "reverse": FamilySelector.reverse_diagonals,
}


def sequence_table(max_n: int, columns: Sequence[str]) -> list[dict[str, int]]:
    return [{"n": n, **{c: COLUMNS[c](n) for c in columns}} for n in range(max_n + 1)]


def cmd_sequences(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    unknown = [c for c in columns if c not in COLUMNS]
    if unknown:
        raise UsageError(f"unknown column(s): {', '.join(unknown)}; "
                         f"choose from {', '.join(COLUMNS)}")
    rows = sequence_table(args.max_n, columns)
    if args.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["n", *columns], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    return EXIT_OK


def _int_set(text: str | None, flag: str, minimum: int) -> list[int] | None:
    if text is None:
        return None
    try:
        values = sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None
    if not values:
        raise UsageError(f"{flag} is empty")
    bad = [v for v in values if v < minimum]
    if bad:
        raise UsageError(f"{flag} values must be >= {minimum}, got {bad[0]}")
    return values


def _bijection_line(tag: str, rep, **params) -> str:
    extra = "".join(f" {k}={v}" for k, v in params.items())
    verdict = "pass" if rep.passed else "FAIL"
    return (f"{tag} n={rep.n}{extra} domain={rep.domain_size} "
            f"image_in_target={rep.image_in_target} target={rep.target_size} "
            f"roundtrip_failures={rep.roundtrip_failures} "
            f"collisions={rep.collisions} {verdict}")


def _theorem_lines(theorem: int, n: int, ks, ps, ds) -> Iterator[tuple[bool, str]]:
    if theorem in (1, 2, 6):
        check = {1: ids.thm1_check, 2: ids.thm2_check, 6: ids.thm6_check}[theorem](n)
        yield check.passed, check.describe()
    elif theorem == 3:
        checks = ids.thm3_checks(n) if ks is None else [ids.thm3_check(n, k) for k in ks]
        for c in checks:
            yield c.passed, c.describe()
            k = c.params["k"]
            rep = verify_bijection(n, thm3_map, thm3_inverse,
                                   ids.exactly_k_distinct_even(k), ids.exactly_k_repeated(k))
            yield rep.passed, _bijection_line("T3-bijection", rep, k=k)
    elif theorem == 4:
        for d in ds:
            c = ids.thm4_check(n, d)
            yield c.passed, c.describe()
            rep = verify_bijection(n, lambda lam: glaisher_d_forward(lam, d),
                                   lambda lam: glaisher_d_inverse(lam, d),
                                   ids.no_part_divisible_by(d), ids.multiplicities_below(d))
            yield rep.passed, _bijection_line("T4-bijection", rep, d=d)
    elif theorem == 5:
        for p in ps:
            checks = (ids.thm5_checks(n, p) if ks is None
                      else [ids.thm5_check(n, k, p) for k in ks])
            for c in checks:
                yield c.passed, c.describe()
                k = c.params["k"]
                for name in ("identity", "transpose"):
                    sel = SELECTORS[name](p)
                    rep = verify_bijection(
                        n, lambda lam: thm5_map(lam, p, sel),
                        lambda lam: thm5_inverse(lam, p, sel),
                        ids.exactly_k_high_valuation(k, p),
                        ids.exactly_k_high_multiplicity(k, p))
                    yield rep.passed, _bijection_line("T5-bijection", rep, k=k, p=p,
                                                      selector=name)


def cmd_check(args, out) -> int:
    theorem = args.theorem
    max_n = DEFAULT_MAX_N[theorem] if args.max_n is None else args.max_n
    if max_n < 1:
        raise UsageError("--max-n must be at least 1")
    ks = _int_set(args.k, "--k", 0)
    ps = _int_set(args.p, "--p", 2)
    ds = _int_set(args.d, "--d", 2)
    allowed = {1: (), 2: (), 6: (), 3: ("k",), 4: ("d",), 5: ("k", "p")}[theorem]
    for flag, value in (("k", ks), ("p", ps), ("d", ds)):
        if value is not None and flag not in allowed:
            raise UsageError(f"--{flag} does not apply to theorem {theorem}")
    ps = ps or [2, 3]
    ds = ds or [2, 3, 5]

    all_ok = True
    for n in range(1, max_n + 1):
        for ok, line in _theorem_lines(theorem, n, ks, ps, ds):
            all_ok &= ok
            out.write(line + "\n")
    out.write(f"RESULT {'pass' if all_ok else 'fail'}\n")
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_map(args, out) -> int:
    lam = parse_partition(args.partition)
    if args.bijection == "glaisher":
        d = 2 if args.d is None else args.d
        fn = glaisher_d_inverse if args.inverse else glaisher_d_forward
        image = fn(lam, d)
    elif args.bijection == "thm3":
        image = (thm3_inverse if args.inverse else thm3_map)(lam)
    else:
        p = 2 if args.p is None else args.p
        if p < 2:
            raise DomainError(f"p must be at least 2, got {p}")
        sel = SELECTORS[args.selector](p)
        image = (thm5_inverse if args.inverse else thm5_map)(lam, p, sel)
    out.write(format_partition(image) + "\n")
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    family = encode(parse_partition(args.partition))
    if family:
        out.write(render_family(family) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.klass not in CLASSES:
        raise UsageError(f"unknown class {args.klass!r}; choose from {', '.join(CLASSES)}")
    total = 0
    for lam in gen_partitions(args.n, CLASSES[args.klass]):
        out.write(format_partition(lam) + "\n")
        total += 1
    out.write(f"# count {total}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partmatrix",
        description="Partition bijections and identities via binary multiplicity matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sequences", help="table of counting sequences")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--columns", default=",".join(COLUMNS))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("check", help="verify an identity for 1 <= n <= max-n")
    p.add_argument("--theorem", type=int, choices=range(1, 7), required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--k", help="comma-separated k values (default: every k that occurs)")
    p.add_argument("--p", help="comma-separated p values, each >= 2 (default 2,3)")
    p.add_argument("--d", help="comma-separated d values, each >= 2 (default 2,3,5)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("map", help="apply a bijection to one partition")
    p.add_argument("--bijection", choices=("glaisher", "thm3", "thm5"), required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--p", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--selector", choices=tuple(SELECTORS), default="identity")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("matrix", help="render the binary multiplicity matrices")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("enumerate", help="list the partitions of n in a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="klass", required=True)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, sys.stdout)
    except (UsageError, DomainError) as exc:
        print(f"partmatrix {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
