"""Command-line interface: validate, analyze, enumerate, conform, replay.

Exit codes: 0 success, 1 validation failure or ExpectedPass violation,
2 usage error (bad flags, unreadable files, unknown check ids).
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import conformance, green, io
from .classify import ROUTES, classify
from .core import ElementSet, GammaSemigroup
from .enumeration import (
    CorpusSpec,
    Exhaustive,
    Random,
    Structured,
    build_corpus,
    parse_corpus_spec,
)
from .errors import GammaSemigroupError, NotAssociative, TableSyntaxError, TooLarge, UnknownCheck
from .ideals import KINDS, IdealKind, all_ideals
from .prime import all_prime_ideals, is_prime_ideal

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("gammasg")


class UsageError(Exception):
    pass


def _load(path: str, strict: bool) -> GammaSemigroup:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return io.parse(text, check_associativity=strict)


def _set(S: GammaSemigroup, s: ElementSet) -> str:
    return S.format_set(s)


def _classes(S: GammaSemigroup, groups: list[list[int]]) -> list[str]:
    return [S.format_set(ElementSet.of(S.n, g)) for g in groups]


def _yn(v) -> str:
    return "n/a" if v is None else ("yes" if v else "no")


# -- validate -----------------------------------------------------------------------


def cmd_validate(args) -> int:
    try:
        S = _load(args.file, strict=True)
    except NotAssociative as exc:
        print(f"{args.file}: not associative; witness (a, alpha, b, beta, c) = {exc.witness}", file=sys.stderr)
        return EXIT_FAIL
    except GammaSemigroupError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    z = "-" if S.zero is None else S.element_label(S.zero)
    print(f"{args.file}: ok (n={S.n}, m={S.m}, zero={z})")
    return EXIT_OK


# -- analyze ------------------------------------------------------------------------


def _analysis_rows(S: GammaSemigroup, args) -> list[tuple[str, str, str]]:
    """(section, key, value) rows shared by the text and TSV renderers."""
    rows: list[tuple[str, str, str]] = []
    rows.append(("instance", "n", str(S.n)))
    rows.append(("instance", "m", str(S.m)))
    rows.append(("instance", "zero", "-" if S.zero is None else S.element_label(S.zero)))
    rows.append(("instance", "associative", _yn(S.associative)))
    rows.append(("instance", "commutative", _yn(S.is_commutative())))

    if args.ideals:
        kinds = KINDS if args.ideals == "all" else (IdealKind.parse(args.ideals),)
        for kind in kinds:
            for B in all_ideals(S, kind):
                rows.append(("ideal", kind.value, _set(S, B)))
    if args.green:
        gs = green.green_structure(S)
        for which in "LRD":
            for c in _classes(S, gs.classes(which)):
                rows.append(("green", which, c))
        rows.append(("green", "LR=RL", _yn(gs.lr_equals_rl)))
    if args.idempotents:
        for e in green.idempotents(S):
            rows.append(("idempotent", "idempotent", S.element_label(e)))
        for e in green.primitive_idempotents(S):
            rows.append(("idempotent", "primitive", S.element_label(e)))
        for e in green.regular_elements(S):
            rows.append(("idempotent", "regular", S.element_label(e)))
    if args.classify:
        c = classify(S)
        for name in ROUTES:
            rows.append(("classify", name, _yn(c[name])))
        for name, a, b in c.disagreements:
            rows.append(("classify", f"disagreement:{name}", f"{a}/{b}"))
    if args.primes:
        for Q in all_prime_ideals(S):
            rows.append(("prime", "prime", _set(S, Q)))
        for B in all_ideals(S, IdealKind.TWO_SIDED):
            v = is_prime_ideal(S, B)
            if not v.is_prime:
                E, F = v.witness
                rows.append(("prime", "not-prime", f"{_set(S, B)} witness {_set(S, E)} {_set(S, F)}"))
    return rows


def _render_text(rows: list[tuple[str, str, str]]) -> str:
    out: list[str] = []
    current = None
    for section, key, value in rows:
        if section == "instance":
            if current != section:
                out.append("instance")
                current = section
            out.append(f"  {key}: {value}")
            continue
        label = f"{section} {key}"
        if current != label:
            out.append(label)
            current = label
        out.append(f"  {value}")
    return "\n".join(out) + "\n"


def _render_tsv(rows) -> str:
    return "section\tkey\tvalue\n" + "".join(f"{s}\t{k}\t{v}\n" for s, k, v in rows)


def cmd_analyze(args) -> int:
    try:
        S = _load(args.file, strict=False)
    except GammaSemigroupError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if not S.associative:
        w = S.associativity_witness()
        print(
            f"warning: {args.file} is not associative; witness (a, alpha, b, beta, c) = {w}; "
            "results below describe the table as given",
            file=sys.stderr,
        )
        if args.strict:
            return EXIT_FAIL
    if not any((args.ideals, args.green, args.idempotents, args.classify, args.primes)):
        args.ideals, args.green, args.idempotents, args.classify, args.primes = "all", True, True, True, True
    rows = _analysis_rows(S, args)
    sys.stdout.write(_render_tsv(rows) if args.format == "tsv" else _render_text(rows))
    return EXIT_OK


# -- enumerate ----------------------------------------------------------------------


def _size_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    try:
        r = (int(lo), int(hi or lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if r[0] < 1 or r[1] < r[0]:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return r


def cmd_enumerate(args) -> int:
    specs: list[CorpusSpec] = []
    common = dict(n_range=args.n, m_range=args.m, iso_reduce=args.iso_reduce, adjoin_zero=args.adjoin_zero)
    if args.exhaustive:
        specs.append(CorpusSpec(Exhaustive(), cell_cap=args.cell_cap, **common))
    if args.random:
        if args.seed is None:
            raise UsageError("--random needs an explicit --seed")
        specs.append(CorpusSpec(Random(args.seed, args.count, args.max_tries), **common))
    if args.structured:
        specs.append(CorpusSpec(Structured(tuple(args.family or ()), max_n=args.n[1]),
                                iso_reduce=args.iso_reduce, adjoin_zero=args.adjoin_zero))
    if not specs:
        raise UsageError("choose at least one of --exhaustive, --random, --structured")
    corpus = build_corpus(specs)
    manifest = io.write_corpus(corpus, args.out)
    print(f"wrote {len(corpus)} instances to {manifest}")
    return EXIT_OK


# -- conform / replay ---------------------------------------------------------------


def _corpus_from_arg(text: str):
    p = Path(text)
    if p.is_dir() or p.suffix == ".tsv" or p.exists():
        return io.read_corpus(p)
    try:
        return build_corpus(parse_corpus_spec(text))
    except TooLarge:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_conform(args) -> int:
    checks = [c.strip() for c in args.checks.split(",")] if args.checks else None
    if checks is not None:
        for c in checks:
            conformance.lookup(c)
    corpus = _corpus_from_arg(args.corpus)
    t0 = time.perf_counter()
    report = conformance.run(corpus, checks)
    elapsed = time.perf_counter() - t0
    tsv = report.to_tsv()
    if args.report and args.report != "-":
        Path(args.report).write_text(tsv, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(tsv)
    if args.witness_dir:
        d = Path(args.witness_dir)
        d.mkdir(parents=True, exist_ok=True)
        for cex in report.counterexamples:
            name = cex.cid.replace("#", "_").replace("~", "-") + io.SUFFIX
            text = f"# check {cex.check_id} seq {cex.seq} {cex.family}\n# witness {cex.witness_text()}\n"
            (d / name).write_text(text + io.serialize(cex.instance), encoding="utf-8", newline="\n")
    print(report.summary(), file=sys.stderr)
    print(f"checked {report.instances} instances in {elapsed:.2f}s", file=sys.stderr)
    if not report.ok:
        print("ExpectedPass violations: " + ", ".join(report.failures), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_replay(args) -> int:
    conformance.lookup(args.check)
    try:
        S = _load(args.file, strict=True)
    except GammaSemigroupError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out = conformance.lookup(args.check).check(S)
    if not out.applicable:
        print(f"{args.check}: not applicable")
    elif out.passed:
        print(f"{args.check}: holds")
    else:
        print(f"{args.check}: violated {out.witness}")
    return EXIT_OK


def cmd_checks(args) -> int:
    for c in conformance.registry() + conformance.monitors():
        print(f"{c.id}\t{c.expected.value}\t{c.requires}\t{c.statement}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gammasg", description="Finite Γ-semigroup analysis and theorem conformance.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="parse a table file and check every axiom")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="ideals, Green's relations, idempotents, classification, primes")
    a.add_argument("file")
    a.add_argument("--ideals", choices=["left", "right", "two-sided", "all"])
    a.add_argument("--green", action="store_true")
    a.add_argument("--idempotents", action="store_true")
    a.add_argument("--classify", action="store_true")
    a.add_argument("--primes", action="store_true")
    a.add_argument("--format", choices=["text", "tsv"], default="text")
    a.add_argument("--strict", action="store_true", help="exit 1 instead of warning on a non-associative table")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="write a corpus of instances and a manifest")
    e.add_argument("--n", type=_size_range, default=(1, 3), help="carrier size N or range LO-HI")
    e.add_argument("--m", type=_size_range, default=(1, 1), help="gamma size N or range LO-HI")
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", action="store_true")
    e.add_argument("--seed", type=int)
    e.add_argument("--count", type=int, default=100)
    e.add_argument("--max-tries", type=int, default=20_000)
    e.add_argument("--structured", action="store_true")
    e.add_argument("--family", action="append", help="structured family label prefix (repeatable)")
    e.add_argument("--iso-reduce", action="store_true")
    e.add_argument("--adjoin-zero", action="store_true")
    e.add_argument("--cell-cap", type=int, default=12)
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("conform", help="run the theorem registry over a corpus")
    c.add_argument("--corpus", default="standard",
                   help="manifest file or directory, or a spec such as 'exhaustive,structured:nilpotent'")
    c.add_argument("--checks", help="comma-separated check ids")
    c.add_argument("--report", help="write the TSV report here instead of stdout")
    c.add_argument("--witness-dir", help="write each counterexample instance as a table file")
    c.set_defaults(func=cmd_conform)

    r = sub.add_parser("replay", help="re-run one check on a table file")
    r.add_argument("file")
    r.add_argument("--check", required=True)
    r.set_defaults(func=cmd_replay)

    k = sub.add_parser("checks", help="list registered checks")
    k.set_defaults(func=cmd_checks)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, UnknownCheck, TooLarge, TableSyntaxError) as exc:
        print(f"gammasg {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GammaSemigroupError as exc:
        print(f"gammasg {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
