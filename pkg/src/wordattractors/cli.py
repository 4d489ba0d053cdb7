"""Command-line front end.

Exit status: 0 on success or match, 1 when a verification fails or a
cross-check finds a mismatch, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .attractors import AttractorVerifier, is_attractor_naive, minimal_unique_substrings
from .enumeration import AttractorFamily, enumerate_attractors_of_size, enumerate_smallest_attractors
from .errors import BudgetExceededError, OrderCapError
from .fibonacci import fib_attractor_count, fib_smallest_attractors, lrl_sets, lrl_sets_from_parse, singular_parse_tree
from .period_doubling import pd_smallest_attractors
from .plot import plot, plot_spec
from .validation import crosscheck_fib, crosscheck_pd, verifier_fuzz, verifier_sweep
from .words import Word, fib_singular_factorization, fib_word, pd_word, singular_word

_GENERATORS = {"fib": fib_word, "sing": singular_word, "pd": pd_word}


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, separators=(",", ":"))


def read_word(spec: str) -> Word:
    """A word from a file path, a ``fib:N``/``sing:N``/``pd:N`` shorthand, or a literal."""
    if os.path.isfile(spec):
        with open(spec, encoding="ascii") as fh:
            return Word.from_text(fh.read())
    family, sep, order = spec.partition(":")
    if sep and family in _GENERATORS:
        return _GENERATORS[family](int(order))
    return Word(spec)


def parse_positions(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"positions must be comma-separated integers, got {text!r}") from None


def _family_out(args, family: AttractorFamily, method: str | None = None) -> None:
    if args.json:
        if method:
            print(f"method: {method}", file=sys.stderr)
        print(family.to_json())
    else:
        header = f"# k={family.k} count={len(family)}"
        if method:
            header += f" method={method}"
        print(header)
        sys.stdout.write(family.to_text())


def cmd_gen(args) -> int:
    if args.factorization:
        if args.family != "fib":
            raise UsageError("--factorization applies to fib only")
        print(fib_singular_factorization(args.n).to_json())
        return 0
    word = _GENERATORS[args.family](args.n)
    print(_dump({"family": args.family, "n": args.n, "word": word.text}) if args.json else word.text)
    return 0


def cmd_verify(args) -> int:
    word = read_word(args.word)
    gamma = parse_positions(args.gamma)
    outcome = is_attractor_naive(word, gamma) if args.naive else AttractorVerifier(word).check(gamma)
    if args.json:
        print(outcome.to_json())
    elif outcome.is_attractor:
        print("attractor")
    else:
        lo, hi = outcome.witness
        print(f"not an attractor: witness [{lo},{hi}] = {word.sub(lo, hi)}")
    return 0 if outcome.is_attractor else 1


def cmd_mus(args) -> int:
    report = minimal_unique_substrings(read_word(args.word))
    if args.json:
        print(report.to_json())
    else:
        for (lo, hi), s in zip(report.intervals, report.substrings):
            print(f"[{lo},{hi}] {s}")
    return 0


def cmd_enumerate(args) -> int:
    word = read_word(args.word)
    if args.k is not None:
        family = AttractorFamily(args.k, tuple(enumerate_attractors_of_size(word, args.k, args.prune, args.budget)))
    else:
        family = enumerate_smallest_attractors(word, args.prune, args.budget)
    _family_out(args, family)
    return 0


def cmd_closed_form(args) -> int:
    if args.family == "fib":
        family, method = fib_smallest_attractors(args.n)
    else:
        family, method = pd_smallest_attractors(args.n)
    _family_out(args, family, method)
    return 0


def cmd_crosscheck(args) -> int:
    if args.family == "fib":
        report = crosscheck_fib(args.lo, args.hi, prune=args.prune, naive=args.naive)
    else:
        report = crosscheck_pd(args.lo, args.hi, prune=args.prune, naive=args.naive, allow_large=args.allow_large)
    if args.json:
        print(report.to_json(args.timing))
    else:
        sys.stdout.write(report.to_text(args.timing))
    return 0 if report.ok else 1


def cmd_count(args) -> int:
    if args.n >= 7:
        count, method = fib_attractor_count(args.n), "formula"
    else:
        count, method = len(enumerate_smallest_attractors(fib_word(args.n), prune=True)), "enumeration"
    print(_dump({"n": args.n, "count": count, "method": method}) if args.json else count)
    return 0


def cmd_plot(args) -> int:
    text = plot(plot_spec(args.family, args.n, svg=args.svg))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_lrl(args) -> int:
    sets = lrl_sets(args.k) if args.from_parse is None else lrl_sets_from_parse(args.k, args.from_parse)
    if args.json:
        print(sets.to_json())
    else:
        for name, values in (("L", sets.L), ("R", sets.R), ("L'", sets.Lp)):
            print(f"{name}_{sets.k} = {{{', '.join(map(str, values))}}}")
    return 0


def cmd_tree(args) -> int:
    print(singular_parse_tree(args.n).to_json())
    return 0


def cmd_fuzz(args) -> int:
    if args.sweep:
        report = verifier_sweep(args.max_len or 10, 2 if args.max_gamma is None else args.max_gamma)
    else:
        report = verifier_fuzz(args.trials, args.max_len or 16, args.seed, 3 if args.max_gamma is None else args.max_gamma)
    if args.json:
        print(report.to_json())
    else:
        print(f"{report.trials} checks, {len(report.disagreements)} disagreements")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(
        prog="wordattractors",
        description="Smallest string attractors of Fibonacci and period-doubling words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a word")
    p.add_argument("family", choices=["fib", "sing", "pd"])
    p.add_argument("n", type=int)
    p.add_argument("--factorization", action="store_true", help="print the singular-word factorization of F_n")
    p.set_defaults(func=cmd_gen)

    word_help = "word literal, file path, or fib:N / sing:N / pd:N"
    p = sub.add_parser("verify", parents=[common], help="check whether positions form an attractor")
    p.add_argument("--word", required=True, help=word_help)
    p.add_argument("--gamma", required=True, help="1-based positions, comma-separated")
    p.add_argument("--naive", action="store_true", help="use the brute-force verifier")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mus", parents=[common], help="minimal unique substrings")
    p.add_argument("--word", required=True, help=word_help)
    p.set_defaults(func=cmd_mus)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate smallest attractors by exhaustive search")
    p.add_argument("--word", required=True, help=word_help)
    p.add_argument("--prune", action="store_true", help="only try sets meeting every MUS")
    p.add_argument("--k", type=int, help="enumerate attractors of exactly this size instead")
    p.add_argument("--budget", type=int, default=10**7, help="maximum number of candidate subsets per size")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("closed-form", parents=[common], help="Att(F_n) or Att(D_n) from the closed forms")
    p.add_argument("family", choices=["fib", "pd"])
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("crosscheck", parents=[common], help="closed form against brute force for a range of orders")
    p.add_argument("family", choices=["fib", "pd"])
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--prune", action="store_true")
    p.add_argument("--naive", action="store_true", help="enumerate with the brute-force verifier")
    p.add_argument("--allow-large", action="store_true", help="permit period-doubling order 9")
    p.add_argument("--timing", action="store_true", help="include per-order timings")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("count", parents=[common], help="number of smallest attractors of F_n")
    p.add_argument("family", choices=["fib"])
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("plot", help="dot plot of all smallest attractors")
    p.add_argument("family", choices=["fib", "pd"])
    p.add_argument("n", type=int)
    p.add_argument("--svg", action="store_true")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("lrl", parents=[common], help="the sets L_k, R_k, L'_k")
    p.add_argument("k", type=int)
    p.add_argument("--from-parse", type=int, metavar="N", help="read them off the parse tree of F_N")
    p.set_defaults(func=cmd_lrl)

    p = sub.add_parser("tree", help="singular-word parse tree of F_n as JSON")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("fuzz", parents=[common], help="fast verifier against the naive one")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-len", type=int, help="longest word (default 16, or 10 with --sweep)")
    p.add_argument("--max-gamma", type=int, help="largest position set (default 3, or 2 with --sweep)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sweep", action="store_true", help="exhaustive over all words up to --max-len")
    p.set_defaults(func=cmd_fuzz)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OrderCapError, BudgetExceededError, IndexError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    try:
        sys.exit(run())
    except BrokenPipeError:
        sys.exit(0)


if __name__ == "__main__":
    main()
