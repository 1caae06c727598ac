"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from sympy import factorint

from . import __version__
from .codes import (
    CyclicSpec,
    LinearCode,
    WeightDistribution,
    code_equal,
    code_from_matrix,
    cyclic_code,
    cyclotomic_cosets,
    generator_polynomial,
    min_distance,
    reciprocal,
    weight_distribution,
    x_n_minus_1,
)
from .errors import ParseError, TraceCodeError
from .galois import FieldSpec, GFPolynomial, make_field, parse_element, parse_field_spec
from .linalg import parse_matrix
from .representations import (
    cyclic_defining_set,
    defining_set_from_matrix,
    wolfmann_code,
    wolfmann_spec_from_check,
)
from .trace_construction import (
    DefiningSet,
    parse_defining_set,
    trace_code,
    weight_distribution_via_character_sums,
)
from .verify import DEFAULT_SEED, run_suites


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _prime_power(q: int) -> tuple[int, int]:
    f = factorint(q)
    if q < 2 or len(f) != 1:
        raise ParseError(f"{q} is not a prime power")
    (p, s), = f.items()
    return p, s


def _ground_field(args) -> FieldSpec:
    if args.field:
        return parse_field_spec(args.field)
    return make_field(2, 1)


def _poly(text: str, q_spec: FieldSpec) -> GFPolynomial:
    try:
        cs = [int(c) for c in text.replace(" ", "").split(",") if c != ""]
    except ValueError as exc:
        raise ParseError(f"bad polynomial {text!r}") from exc
    if not cs or any(not 0 <= c < q_spec.order for c in cs):
        raise ParseError(f"bad polynomial {text!r} over GF({q_spec.order})")
    return GFPolynomial(q_spec, cs)


def _code_report(code: LinearCode, wd: WeightDistribution | None = None) -> dict:
    wd = wd or weight_distribution(code)
    d = min_distance(code, wd) if code.k else None
    return {
        "q": code.q,
        "n": code.n,
        "k": code.k,
        "d": d,
        "weight_distribution": list(wd.counts),
        "weight_enumerator": wd.enumerator(),
        "generator_matrix": code.generator.entries.tolist(),
    }


def _params(rep: dict) -> str:
    if rep["d"] is None:
        return f"[{rep['n']},{rep['k']}]"
    return f"[{rep['n']},{rep['k']},{rep['d']}]"


def _code_lines(code: LinearCode, rep: dict) -> list[str]:
    lines = [
        f"code: {_params(rep)} over GF({rep['q']})",
        f"weight enumerator: {rep['weight_enumerator']}",
        "generator matrix (RREF):",
    ]
    lines += ["  " + ln for ln in code.generator.to_text().splitlines()] or ["  (zero code)"]
    return lines


def _defset_doc(D: DefiningSet) -> dict:
    return {
        "field": str(D.big_spec),
        "ground_degree": D.s,
        "defining_set": [e.to_power_str() for e in D.elements],
        "defining_set_coeffs": [list(e.coeffs) for e in D.elements],
    }


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_trace_code(args) -> tuple[dict, list[str]]:
    if args.file:
        big = parse_field_spec(args.field) if args.field else None
        D = parse_defining_set(_read(args.file), args.ground_degree, big)
    elif args.elements is not None:
        if not args.field:
            raise UsageError("--field is required with an inline defining set")
        D = parse_defining_set(args.elements, args.ground_degree, parse_field_spec(args.field))
    else:
        raise UsageError("give a defining set inline or with --file")
    code = trace_code(D)
    rep = _code_report(code)
    doc = {**_defset_doc(D), **rep}
    lines = [f"field: {D.big_spec} (ground GF({D.ground.order}))", f"defining set: {D.power_notation()}"]
    return doc, lines + _code_lines(code, rep)


def cmd_to_defining_set(args) -> tuple[dict, list[str]]:
    q_spec = _ground_field(args)
    G = parse_matrix(_read(args.matrix), q_spec)
    D = defining_set_from_matrix(G)
    code = code_from_matrix(G)
    same = code_equal(trace_code(D), code)
    doc = {**_defset_doc(D), "m": D.m, "equal_to_input_code": same, **_code_report(code)}
    lines = [
        f"m: {D.m}",
        f"field: {D.big_spec}",
        f"defining set: {D.power_notation()}",
        f"coefficients: {D.coeff_notation()}",
        f"equal to input code: {_yes(same)}",
    ]
    return doc, lines


def cmd_cyclic_rep(args) -> tuple[dict, list[str]]:
    p, s = _prime_power(args.q)
    q_spec = make_field(p, s)
    f = _poly(args.f, q_spec)
    if f.is_zero():
        raise ParseError("f must be nonzero")
    spec = CyclicSpec(q_spec, args.n, f)
    alpha = None
    if args.alpha:
        alpha = parse_element(args.alpha, make_field(p, s * args.n))
    D = cyclic_defining_set(spec, alpha)
    g = generator_polynomial(f, args.n)
    code = cyclic_code(g, args.n)
    same = code_equal(trace_code(D), code)
    rep = _code_report(code)
    doc = {
        **_defset_doc(D),
        "generator_polynomial": g.to_ints(),
        "equal_to_cyclic_code": same,
        **rep,
    }
    lines = [
        f"field: {D.big_spec}",
        f"generator polynomial: {g.pretty()}",
        f"defining set: {D.power_notation()}",
        f"coefficients: {D.coeff_notation()}",
        f"equal to cyclic code: {_yes(same)}",
    ] + _code_lines(code, rep)
    return doc, lines


def cmd_wolfmann(args) -> tuple[dict, list[str]]:
    p, s = _prime_power(args.q)
    q_spec = make_field(p, s)
    h = _poly(args.h, q_spec)
    W = wolfmann_spec_from_check(h, args.n)
    code = wolfmann_code(W)
    g = x_n_minus_1(q_spec, args.n) // h
    same = code_equal(code, cyclic_code(g, args.n))
    rep = _code_report(code)
    doc = {
        "field": str(W.big_spec),
        "m": W.m,
        "beta": W.beta.to_power_str(),
        "J": list(W.J),
        "cosets": cyclotomic_cosets(args.n, args.q),
        "reciprocal_check_polynomial": reciprocal(h).to_ints(),
        "equal_to_cyclic_code": same,
        **rep,
    }
    lines = [
        f"m: {W.m}",
        f"field: {W.big_spec}",
        f"beta: {W.beta.to_power_str()}",
        f"h*: {reciprocal(h).pretty()}",
        f"J: {{{', '.join(map(str, W.J))}}}",
        f"equal to cyclic code: {_yes(same)}",
    ] + _code_lines(code, rep)
    return doc, lines


def cmd_weights(args) -> tuple[dict, list[str]]:
    if args.defining_set:
        big = parse_field_spec(args.field) if args.field else None
        D = parse_defining_set(_read(args.defining_set), args.ground_degree, big)
        code = trace_code(D)
        wd = weight_distribution(code)
        via = weight_distribution_via_character_sums(D, code.k)
        doc = {
            **_defset_doc(D),
            **_code_report(code, wd),
            "weight_distribution_character_sums": list(via.counts),
            "agree": via == wd,
        }
        lines = [
            f"code: {_params(doc)} over GF({code.q})",
            f"brute force:     {wd.enumerator()}",
            f"character sums:  {via.enumerator()}",
            f"agree: {_yes(via == wd)}",
        ]
        return doc, lines
    if not args.matrix:
        raise UsageError("give a matrix file or --defining-set")
    G = parse_matrix(_read(args.matrix), _ground_field(args))
    code = code_from_matrix(G)
    rep = _code_report(code)
    lines = [
        f"code: {_params(rep)} over GF({rep['q']})",
        f"weight distribution: {' '.join(map(str, rep['weight_distribution']))}",
        f"weight enumerator: {rep['weight_enumerator']}",
    ]
    return rep, lines


def cmd_verify(args) -> tuple[dict, list[str]]:
    results = run_suites(args.seed, args.rounds)
    ok = all(r.ok for r in results)
    doc = {
        "seed": args.seed,
        "rounds": args.rounds,
        "suites": {r.name: {"passed": r.passed, "total": r.total} for r in results},
        "ok": ok,
    }
    lines = [f"seed: {args.seed}"] + [r.line() for r in results] + [f"overall: {'PASS' if ok else 'FAIL'}"]
    if not ok:
        raise _Failed(doc, lines)
    return doc, lines


class _Failed(Exception):
    def __init__(self, doc, lines):
        super().__init__("verification failed")
        self.doc, self.lines = doc, lines


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def dflt(v):
        return argparse.SUPPRESS if suppress else v

    parser.add_argument("--field", default=dflt(None), help="field spec 'p,d[,c0,...,cd]' or 'p=..,d=..,modulus=..'")
    parser.add_argument("--json", action="store_true", default=dflt(False), help="emit a JSON document")
    parser.add_argument("--seed", type=int, default=dflt(DEFAULT_SEED))
    parser.add_argument("-s", "--ground-degree", type=int, default=dflt(1), help="ground field GF(p^s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tracecodes", description="Trace representations of linear codes.")
    _global_flags(parser, suppress=False)
    # global flags are accepted after the subcommand too; SUPPRESS keeps the
    # subparser from clobbering values given before it
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace-code", parents=[common], help="code C_D of a defining set")
    p.add_argument("elements", nargs="?", help="comma-separated elements (needs --field)")
    p.add_argument("--file", help="defining-set file: field-spec header line, then elements")
    p.set_defaults(func=cmd_trace_code)

    p = sub.add_parser("to-defining-set", parents=[common], help="defining set for a generator matrix")
    p.add_argument("matrix", help="matrix file over GF(q) given by --field (default GF(2))")
    p.set_defaults(func=cmd_to_defining_set)

    p = sub.add_parser("cyclic-rep", parents=[common], help="normal-element representation of a cyclic code")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("f", help="ascending coefficients, e.g. 1,1,0,1")
    p.add_argument("--alpha", help="normal element of GF(q^n)")
    p.set_defaults(func=cmd_cyclic_rep)

    p = sub.add_parser("wolfmann", parents=[common], help="minimal-polynomial representation (gcd(n,q)=1)")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("h", help="check polynomial, ascending coefficients")
    p.set_defaults(func=cmd_wolfmann)

    p = sub.add_parser("weights", parents=[common], help="weight distribution")
    p.add_argument("matrix", nargs="?", help="matrix file over GF(q) given by --field")
    p.add_argument("--defining-set", help="defining-set file; compares brute force with character sums")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    p.add_argument("--rounds", type=int, default=20)
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, lines = args.func(args)
    except _Failed as exc:
        _emit(args, exc.doc, exc.lines)
        return 1
    except (UsageError, ParseError) as exc:
        print(f"tracecodes: error: {exc}", file=sys.stderr)
        return 2
    except (TraceCodeError, ValueError, ZeroDivisionError) as exc:
        print(f"tracecodes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(args, doc, lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
