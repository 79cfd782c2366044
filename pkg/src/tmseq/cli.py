"""Command-line surface: reproducible generation, checks, and audits.

Exit codes: 0 the property holds (or the report was produced), 1 a
witness/violation was found, 2 usage error.  Reports are JSON on stdout,
diagnostics on stderr; identical command and version give byte-identical
reports apart from ``elapsed_ms``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .derived import alpha_prefix, beta_prefix, theta_prefix, v_prefix, vartheta_prefix, w_prefix
from .dynamics import language_disjointness, uniform_recurrence_bound
from .method_b import MethodBConfig, kappa_prefix
from .thue_morse import lookalike_audit, seeded_flip_prefix, tm_prefix_flip
from .words import UsageError, Word, right_special_census, subword_complexity

DEFAULT_MAX_LENGTH = 1 << 26
_CHUNK = 1 << 20

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_USAGE = 2


def _parse_triple(text: str, what: str) -> tuple[int, int, int]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be three comma-separated integers, got {text!r}")
    if len(values) != 3:
        raise UsageError(f"{what} must have exactly three values, got {text!r}")
    return values  # type: ignore[return-value]


def resolve_family(spec: str, length: int, args: argparse.Namespace | None = None) -> tuple[dict, Word]:
    """Turn a family spec string like ``alpha:1,2,3`` into (echo dict, prefix)."""
    name, _, params = spec.partition(":")
    name = name.lower()
    described: dict = {"family": name, "length": length}
    if name in ("tm", "m"):
        return described, tm_prefix_flip(length)
    if name == "theta":
        return described, theta_prefix(length)
    if name == "vartheta":
        return described, vartheta_prefix(length)
    if name == "v":
        return described, v_prefix(length)
    if name == "w":
        return described, w_prefix(length)
    if name == "beta":
        return described, beta_prefix(length)
    if name == "alpha":
        triple = (1, 2, 3)
        if params:
            triple = _parse_triple(params, "alpha triple")
        elif args is not None and getattr(args, "triple", None):
            triple = _parse_triple(args.triple, "alpha triple")
        described["triple"] = list(triple)
        return described, alpha_prefix(length, triple)
    if name == "kappa":
        gaps = (2, 3, 4)
        if params:
            gaps = _parse_triple(params, "kappa gaps")
        elif args is not None and getattr(args, "gaps", None):
            gaps = _parse_triple(args.gaps, "kappa gaps")
        order = getattr(args, "order", None) or "desc-lex" if args is not None else "desc-lex"
        start = getattr(args, "start_section", None) or 2 if args is not None else 2
        config = MethodBConfig(gap_values=gaps, block_order=order, start_section=start)
        described.update({"gaps": list(gaps), "order": order, "start_section": start})
        return described, kappa_prefix(config, length)
    if name in ("flip", "seeded-flip"):
        seed = params or (getattr(args, "seed", None) if args is not None else None)
        if not seed:
            raise UsageError("seeded-flip needs a seed, e.g. flip:01 or --seed 01")
        described["seed"] = seed
        return described, seeded_flip_prefix(Word.from_str(seed, 2), length)
    raise UsageError(f"unknown family {spec!r}")


def _report(
    command: list[str],
    spec: dict,
    prop: str,
    verdict,
    witnesses: list,
    census: dict,
    started: float,
) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "spec": spec,
        "property": prop,
        "verdict": verdict,
        "witnesses": witnesses,
        "census": census,
        "elapsed_ms": round((time.perf_counter() - started) * 1000.0, 3),
        "determinism_seed": "none",
    }


def _witness_dict(w) -> dict:
    return {
        "start": w.start,
        "root": w.root.to_str(),
        "exponent": w.exponent,
        "overlap_extra": w.overlap_extra,
    }


def _emit(report: dict) -> None:
    json.dump(report, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _check_length(length: int, cap: int) -> None:
    if length < 0:
        raise UsageError("length must be >= 0")
    if length > cap:
        raise UsageError(f"length {length} exceeds cap {cap}; raise with --max-length")


def cmd_generate(args: argparse.Namespace, argv: list[str]) -> int:
    _check_length(args.length, args.max_length)
    _spec, word = resolve_family(args.family, args.length, args)
    if args.format == "json":
        json.dump(word.to_list(), sys.stdout)
        sys.stdout.write("\n")
    else:
        text = word.to_str()
        for i in range(0, len(text), _CHUNK):
            sys.stdout.write(text[i : i + _CHUNK])
        sys.stdout.write("\n")
    return EXIT_OK


def cmd_check(args: argparse.Namespace, argv: list[str]) -> int:
    from .repetitions import find_squares_all, is_cube_free, is_overlap_free, leftmost_square

    started = time.perf_counter()
    _check_length(args.length, args.max_length)
    spec, word = resolve_family(args.family, args.length, args)
    witnesses: list = []
    census: dict = {}
    if args.property == "square":
        report = find_squares_all(word)
        holds = report.square_free
        if not holds:
            witnesses = [_witness_dict(leftmost_square(word))]
        census = {str(k): v for k, v in report.census.items()}
    elif args.property == "cube":
        holds, witness = is_cube_free(word)
        if witness is not None:
            witnesses = [_witness_dict(witness)]
    else:
        holds, witness = is_overlap_free(word)
        if witness is not None:
            witnesses = [_witness_dict(witness)]
    _emit(_report(argv, spec, f"{args.property}-free", holds, witnesses, census, started))
    return EXIT_OK if holds else EXIT_WITNESS


def _audit_squares(args: argparse.Namespace, argv: list[str]) -> int:
    from .repetitions import classify_tm_squares

    started = time.perf_counter()
    _check_length(args.length, args.max_length)
    census = classify_tm_squares(args.length)
    other = [
        {"start": e.start, "root": e.root.to_str()}
        for e in census.other_entries
    ]
    report = _report(
        argv,
        {"family": "tm", "length": args.length},
        "square-census",
        "reported",
        other,
        census.counts,
        started,
    )
    _emit(report)
    return EXIT_OK


def _audit_lookalikes(args: argparse.Namespace, argv: list[str]) -> int:
    started = time.perf_counter()
    _check_length(args.length, args.max_length)
    prefix = tm_prefix_flip(args.length)
    census: dict = {}
    exceptions: list = []
    for k in range(args.k_min, args.k_max + 1):
        audit = lookalike_audit(prefix, k)
        census[f"k={k}"] = {
            "total": audit["total"],
            "x_prime": audit["x_prime"],
            "y_prime": audit["y_prime"],
            "exceptions": len(audit["exceptions"]),
        }
        exceptions.extend(
            {"k": k, "kind": o.kind, "start": o.start} for o in audit["exceptions"]
        )
    verdict = not exceptions
    _emit(
        _report(
            argv,
            {"family": "tm", "length": args.length, "k": [args.k_min, args.k_max]},
            "lookalike-placement",
            verdict,
            exceptions,
            census,
            started,
        )
    )
    return EXIT_OK if verdict else EXIT_WITNESS


def _audit_recurrence(args: argparse.Namespace, argv: list[str]) -> int:
    started = time.perf_counter()
    _check_length(args.length, args.max_length)
    spec, word = resolve_family(args.family, args.length, args)
    report = uniform_recurrence_bound(word, args.max_len)
    table = {
        str(ell): {
            "worst_gap": report.worst_gap[ell],
            "n_bound": report.n_bound[ell],
            "absent_later": len(report.factors_absent_later[ell]),
        }
        for ell in range(1, args.max_len + 1)
    }
    verdict = report.all_recur()
    _emit(_report(argv, spec, "uniform-recurrence", verdict, [], table, started))
    return EXIT_OK


def _audit_compare(args: argparse.Namespace, argv: list[str]) -> int:
    started = time.perf_counter()
    _check_length(args.length, args.max_length)
    spec_a, word_a = resolve_family(args.family_a, args.length, args)
    spec_b, word_b = resolve_family(args.family_b, args.length, args)
    shared = language_disjointness(word_a, word_b, args.depth)
    sample = sorted(w.to_str() for w in shared)[:32]
    report = _report(
        argv,
        {"a": spec_a, "b": spec_b, "depth": args.depth},
        "language-disjointness",
        len(shared) == 0,
        sample,
        {"shared_factors": len(shared)},
        started,
    )
    _emit(report)
    return EXIT_OK if not shared else EXIT_WITNESS


def _audit_complexity(args: argparse.Namespace, argv: list[str]) -> int:
    started = time.perf_counter()
    _check_length(args.length, args.max_length)
    spec, word = resolve_family(args.family, args.length, args)
    complexity = subword_complexity(word, args.n_max)
    right_special = right_special_census(word, args.n_max)
    census = {
        "subword_complexity": complexity,
        "right_special": right_special,
    }
    _emit(_report(argv, spec, "complexity", "reported", [], census, started))
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--length", type=int, required=True)
    parser.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    parser.add_argument("--triple", help="digit triple for alpha, e.g. 1,2,3")
    parser.add_argument("--seed", help="seed word for seeded-flip, e.g. 01")
    parser.add_argument("--gaps", help="gap triple for kappa, e.g. 2,3,4")
    parser.add_argument("--order", default="desc-lex", help="kappa block order")
    parser.add_argument("--start-section", type=int, default=2, help="first kappa section")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmseq",
        description="Thue-Morse and derived sequences: generate, check, audit.",
    )
    parser.add_argument("--version", action="version", version=f"tmseq {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    gen = sub.add_parser("generate", help="emit a prefix of a sequence family")
    gen.add_argument("family", help="tm|theta|vartheta|v|w|beta|alpha[:d1,d2,d3]|kappa[:g1,g2,g3]|flip:SEED")
    _add_common(gen)
    gen.add_argument("--format", choices=("ascii", "json"), default="ascii")

    chk = sub.add_parser("check", help="verify square/cube/overlap-freeness")
    chk.add_argument("property", choices=("square", "cube", "overlap"))
    chk.add_argument("--family", required=True)
    _add_common(chk)

    aud = sub.add_parser("audit", help="structured JSON audits")
    aud_sub = aud.add_subparsers(dest="kind", required=True)

    a_sq = aud_sub.add_parser("squares", help="Thue-Morse square census")
    a_sq.add_argument("--length", type=int, required=True)
    a_sq.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)

    a_la = aud_sub.add_parser("lookalikes", help="unaligned block placement audit")
    a_la.add_argument("--length", type=int, required=True)
    a_la.add_argument("--k-min", type=int, default=1)
    a_la.add_argument("--k-max", type=int, default=8)
    a_la.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)

    a_re = aud_sub.add_parser("recurrence", help="occurrence-gap table")
    a_re.add_argument("--family", required=True)
    _add_common(a_re)
    a_re.add_argument("--max-len", type=int, required=True)

    a_cmp = aud_sub.add_parser("compare", help="shared factors of two families")
    a_cmp.add_argument("--family-a", required=True)
    a_cmp.add_argument("--family-b", required=True)
    a_cmp.add_argument("--depth", type=int, required=True)
    _add_common(a_cmp)

    a_cx = aud_sub.add_parser("complexity", help="subword complexity / branching")
    a_cx.add_argument("--family", required=True)
    _add_common(a_cx)
    a_cx.add_argument("--n-max", type=int, required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    echo = ["tmseq", *argv]
    try:
        if args.cmd == "generate":
            return cmd_generate(args, echo)
        if args.cmd == "check":
            return cmd_check(args, echo)
        if args.cmd == "audit":
            handler = {
                "squares": _audit_squares,
                "lookalikes": _audit_lookalikes,
                "recurrence": _audit_recurrence,
                "compare": _audit_compare,
                "complexity": _audit_complexity,
            }[args.kind]
            return handler(args, echo)
        raise UsageError(f"unknown command {args.cmd!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
