"""Command-line front end.

Subcommands reproduce the count tables (count), apply the maps to words
(map), query profile censuses (profile), evaluate the limiting constants
(constants), compute shuffle orders (shuffle-order), and run the
cross-checking suites (verify).

Exit codes: 0 on success, 1 on a verification or certification failure,
2 on a usage error (including exceeding the enumeration budget).
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    Family,
    ProfileKind,
    census_family,
    census_profile,
    list_profile,
)
from .constants import (
    CertificationError,
    closed_form_report,
    density_series_report,
    pal_free_density,
    square_prefix_densities,
    unbordered_density_estimate,
)
from .maps import (
    adjacent_sum_map,
    adjacent_sum_preimages,
    milk_shuffle,
    milk_shuffle_order,
    milk_shuffle_permutation,
    milk_unshuffle,
    permutation_order,
)
from .recurrences import (
    CacheMismatchError,
    CacheStore,
    default_cache_path,
    min_square_counts,
    no_even_pp_counts,
    no_odd_pp_counts,
    no_pal_prefix_counts,
    square_prefix_counts,
    unbordered_counts,
)
from .verify import SUITES, run_suites
from .words import format_word, parse_word

_SUITE_ORDER = ("bijection", "g-map", "counts", "recurrences", "constants", "lemmas")


def _cache_store(args) -> CacheStore:
    if getattr(args, "cache_dir", None):
        return CacheStore(args.cache_dir / "min_square_counts.tsv")
    return CacheStore(default_cache_path())


def _recurrence_values(k, n_max, family, args) -> dict[int, int]:
    kwargs = {"budget": args.budget}
    if family is Family.UNBORDERED:
        return unbordered_counts(k, n_max, **kwargs).values
    if family is Family.NO_EVEN_PP:
        return no_even_pp_counts(k, n_max, **kwargs).values
    if family is Family.NO_ODD_PP:
        return no_odd_pp_counts(k, n_max, **kwargs).values
    if family is Family.NO_PAL_PREFIX:
        return no_pal_prefix_counts(k, n_max).values
    cache = _cache_store(args)
    if family is Family.MIN_SQUARE:
        return min_square_counts(
            k, n_max, cache=cache, budget=args.budget,
            verify_cache=args.verify_cache, jobs=args.jobs,
        ).values
    min_square = min_square_counts(
        k, max(n_max // 2, 1), cache=cache, budget=args.budget,
        verify_cache=args.verify_cache, jobs=args.jobs,
    )
    free, has = square_prefix_counts(k, n_max, min_square)
    return free.values if family is Family.NO_SQUARE_PREFIX else has.values


def _emit_count_rows(rows, fmt) -> None:
    # rows: (n, value) or (n, value, matched: bool)
    for row in rows:
        if fmt == "bfile":
            print(f"{row[0]} {row[1]}")
        elif fmt == "jsonl":
            record = {"n": row[0], "value": row[1]}
            if len(row) == 3:
                record["match"] = row[2]
            print(json.dumps(record))
        elif len(row) == 3:
            print(f"{row[0]}\t{row[1]}\t{'MATCH' if row[2] else 'MISMATCH'}")
        else:
            print(f"{row[0]}\t{row[1]}")


def _cmd_count(args) -> int:
    family = Family(args.family)
    if args.n_min < 1:
        raise ValueError(f"--n-min must be at least 1, got {args.n_min}")
    ns = range(args.n_min, args.n_max + 1)
    brute = {}
    if args.method in ("brute", "both"):
        for n in ns:
            brute[n] = census_family(
                args.k, n, family, budget=args.budget, jobs=args.jobs
            )
    recurrence = {}
    if args.method in ("recurrence", "both"):
        recurrence = _recurrence_values(args.k, args.n_max, family, args)

    if args.method == "both":
        rows = [(n, brute[n], brute[n] == recurrence[n]) for n in ns]
        bad = [row for row in rows if not row[2]]
        if args.format == "bfile":
            if bad:
                for n, b, _ in bad:
                    print(
                        f"mismatch at n={n}: brute {b}, recurrence {recurrence[n]}",
                        file=sys.stderr,
                    )
                return 1
            _emit_count_rows([(n, brute[n]) for n in ns], args.format)
            return 0
        _emit_count_rows(rows, args.format)
        return 1 if bad else 0

    values = brute if args.method == "brute" else recurrence
    _emit_count_rows([(n, values[n]) for n in ns], args.format)
    return 0


def _cmd_map(args) -> int:
    word = parse_word(args.word, args.k)
    if args.map == "f":
        print(format_word(milk_shuffle(word)))
    elif args.map == "f-inv":
        print(format_word(milk_unshuffle(word)))
    elif args.map == "g":
        print(format_word(adjacent_sum_map(word)))
    else:
        for preimage in adjacent_sum_preimages(word):
            print(format_word(preimage))
    return 0


def _parse_profile_set(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse profile set {text!r}") from None


def _cmd_profile(args) -> int:
    kind = ProfileKind(args.kind)
    wanted = _parse_profile_set(args.set)
    if args.list:
        for word in list_profile(args.k, args.n, kind, wanted, budget=args.budget):
            print(format_word(word))
    else:
        print(
            census_profile(
                args.k, args.n, kind, wanted, budget=args.budget, jobs=args.jobs
            )
        )
    return 0


def _cmd_constants(args) -> int:
    if args.which == "h":
        if args.method == "closed-form":
            report = closed_form_report(args.k, args.terms, args.digits)
        else:
            report = density_series_report(args.k, args.digits)
        print(report.value)
    elif args.which == "rho":
        print(pal_free_density(args.k, args.digits).value)
    elif args.which in ("beta", "alpha"):
        cache = _cache_store(args)
        min_square = min_square_counts(
            args.k, args.c_max, cache=cache, budget=args.budget,
            verify_cache=args.verify_cache, jobs=args.jobs,
        )
        with_square, square_free = square_prefix_densities(
            args.k, args.c_max, min_square
        )
        enclosure = with_square if args.which == "beta" else square_free
        print(f"{enclosure.lower} {enclosure.upper}")
    else:
        report = unbordered_density_estimate(args.k, args.n)
        print(
            f"{report.value} ESTIMATE "
            f"(heuristic agreement: {report.certified_digits} digits)"
        )
    return 0


def _cmd_shuffle_order(args) -> int:
    single = args.n is not None
    ns = [args.n] if single else range(2, args.n_max + 1)
    lines = []
    for n in ns:
        order = milk_shuffle_order(n)
        if args.check:
            direct = permutation_order(milk_shuffle_permutation(n))
            if direct != order:
                print(
                    f"order mismatch at n={n}: permutation {direct}, "
                    f"congruence {order}",
                    file=sys.stderr,
                )
                return 1
        if single:
            lines.append(str(order))
        elif args.format == "bfile":
            lines.append(f"{n} {order}")
        else:
            lines.append(f"{n}\t{order}")
    for line in lines:
        print(line)
    return 0


def _cmd_verify(args) -> int:
    names = _SUITE_ORDER if args.suite == "all" else (args.suite,)
    results = run_suites(
        names, k_max=args.k_max, n_max=args.n_max, budget=args.budget
    )
    failed = False
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name}: {status} ({result.checks} checks)")
        for message in result.failures:
            print(f"  {message}", file=sys.stderr)
        failed = failed or not result.passed
    return 1 if failed else 0


def _add_budget_options(parser, jobs: bool = True, cache: bool = False) -> None:
    parser.add_argument(
        "--budget", type=int, default=DEFAULT_BUDGET,
        help="largest k**n the census may enumerate (default %(default)s)",
    )
    if jobs:
        parser.add_argument(
            "--jobs", type=int, default=1,
            help="worker processes for the census (results are identical)",
        )
    if cache:
        from pathlib import Path

        parser.add_argument(
            "--cache-dir", type=Path, default=None,
            help="directory for the minimal-square count cache "
            "(default: $PALCENSUS_CACHE or the per-user data directory)",
        )
        parser.add_argument(
            "--verify-cache", action="store_true",
            help="recompute cache hits and fail on any disagreement",
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palcensus",
        description="Count words by border, palindromic-prefix, and "
        "square-prefix structure; evaluate the limiting densities.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser(
        "count", help="count a word family over a range of lengths"
    )
    count.add_argument("--k", type=int, required=True, help="alphabet size")
    count.add_argument("--n-min", type=int, default=1)
    count.add_argument("--n-max", type=int, required=True)
    count.add_argument(
        "--family", required=True, choices=[f.value for f in Family]
    )
    count.add_argument(
        "--method", choices=["brute", "recurrence", "both"], default="both"
    )
    count.add_argument(
        "--format", choices=["tsv", "bfile", "jsonl"], default="tsv"
    )
    _add_budget_options(count, cache=True)
    count.set_defaults(func=_cmd_count)

    map_cmd = commands.add_parser("map", help="apply one of the maps to a word")
    map_cmd.add_argument(
        "--map", required=True, choices=["f", "f-inv", "g", "g-pre"],
        help="f: milk shuffle; f-inv: its inverse; g: adjacent sums mod k; "
        "g-pre: the k preimages under g",
    )
    map_cmd.add_argument("--k", type=int, required=True)
    map_cmd.add_argument("--word", required=True)
    map_cmd.set_defaults(func=_cmd_map)

    profile = commands.add_parser(
        "profile", help="count or list words whose profile set equals --set"
    )
    profile.add_argument("--k", type=int, required=True)
    profile.add_argument("--n", type=int, required=True)
    profile.add_argument(
        "--kind", required=True, choices=[kind.value for kind in ProfileKind]
    )
    profile.add_argument(
        "--set", default="", help="comma-separated indices; empty for the empty set"
    )
    profile.add_argument("--list", action="store_true", help="list the words")
    _add_budget_options(profile)
    profile.set_defaults(func=_cmd_profile)

    constants = commands.add_parser(
        "constants", help="evaluate a limiting constant"
    )
    constants.add_argument("--k", type=int, required=True)
    constants.add_argument(
        "--which", required=True, choices=["h", "rho", "beta", "alpha", "gamma"],
        help="h: the density series at 1/k; rho: limiting no-palindromic-"
        "prefix density; beta/alpha: square-prefix density and its "
        "complement; gamma: unbordered density estimate",
    )
    constants.add_argument("--digits", type=int, default=50)
    constants.add_argument(
        "--method", choices=["series", "closed-form"], default="series"
    )
    constants.add_argument(
        "--terms", type=int, default=6, help="summands for --method closed-form"
    )
    constants.add_argument(
        "--c-max", type=int, default=20,
        help="minimal-square counts used for beta/alpha",
    )
    constants.add_argument(
        "--n", type=int, default=60, help="ratio index for the gamma estimate"
    )
    _add_budget_options(constants, cache=True)
    constants.set_defaults(func=_cmd_constants)

    shuffle = commands.add_parser(
        "shuffle-order", help="order of the milk-shuffle permutation"
    )
    group = shuffle.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--n-max", type=int)
    shuffle.add_argument(
        "--check", action="store_true",
        help="also compute the order by iterating the permutation and compare",
    )
    shuffle.add_argument("--format", choices=["tsv", "bfile"], default="tsv")
    shuffle.set_defaults(func=_cmd_shuffle_order)

    verify = commands.add_parser("verify", help="run the cross-checking suites")
    verify.add_argument(
        "--suite", default="all", choices=sorted(SUITES) + ["all"]
    )
    verify.add_argument("--k-max", type=int, default=3)
    verify.add_argument("--n-max", type=int, default=10)
    _add_budget_options(verify, jobs=False)
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except (CertificationError, CacheMismatchError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
