"""Command-line interface.

Exit status convention, shared by all subcommands:

* 0 — complete intersection / check passed
* 3 — not a complete intersection / check refuted
* 2 — precondition violated (point off the variety, point not smooth, ...)
* 1 — usage, parse, or timeout problems

Reports go to standard output; diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from .certificates import (
    CICertificate,
    NonCICertificate,
    parse_certificate,
    serialize_certificate,
)
from .decide import (
    GeneratorSystem,
    check_condition_iv,
    reduce_to_ci,
    trivially_contains,
    verify_certificate,
)
from .errors import BuchbergerTimeout, ParseError
from .groebner import (
    basis_time_limit,
    ideal_member,
    projective_dimension,
    reduced_groebner,
)
from .ideal_file import IdealFile, parse_ideal_file
from .poly import Polynomial, ProjectivePoint
from .parse import parse_polynomial

DEFAULT_TIMEOUT_SECS = 300.0
TIMEOUT_ENV_VAR = "CIFORGE_TIMEOUT_SECS"


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="ciforge",
        description="Decide whether a homogeneous ideal with a smooth point "
        "is a complete intersection, with checkable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, point: bool = False, poly: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="path to a .ideal file")
        p.add_argument("--field", help="override the field line: q or fp:<p>")
        if point:
            p.add_argument("--point", help="override the point line: e.g. \"1,1,1,1\"")
        if poly:
            p.add_argument("--poly", required=True, help="polynomial expression")
        return p

    p = add("decide", "run the reduction and write a certificate", point=True)
    p.add_argument("--out", help="write the certificate JSON to this path")
    p.set_defaults(handler=_cmd_decide)

    p = add("groebner", "print the reduced grevlex basis")
    p.set_defaults(handler=_cmd_groebner)

    p = add("dim", "print the projective dimension of the zero locus")
    p.set_defaults(handler=_cmd_dim)

    p = add("member", "test ideal membership of --poly", poly=True)
    p.set_defaults(handler=_cmd_member)

    p = add("trivial", "test trivial containment of --poly", poly=True)
    p.set_defaults(handler=_cmd_trivial)

    p = add("check-iv", "tangent-space containment test for --poly", point=True, poly=True)
    p.add_argument(
        "--family",
        default="",
        help="semicolon-separated lower-degree ideal members (may be empty)",
    )
    p.set_defaults(handler=_cmd_check_iv)

    p = add("verify", "re-check a certificate against the input", point=True)
    p.add_argument("--cert", required=True, help="path to a certificate JSON file")
    p.set_defaults(handler=_cmd_verify)

    return parser


def _load(args: argparse.Namespace) -> IdealFile:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc}") from exc
    return parse_ideal_file(
        text,
        field_override=args.field,
        point_override=getattr(args, "point", None),
    )


def _need_point(loaded: IdealFile) -> ProjectivePoint:
    if loaded.point is None:
        raise _UsageError("this command needs a point (point: line or --point)")
    return loaded.point


def _system(loaded: IdealFile) -> GeneratorSystem:
    return GeneratorSystem.from_polynomials(loaded.gens, loaded.ring)


def _parse_poly(loaded: IdealFile, text: str) -> Polynomial:
    return parse_polynomial(text, loaded.ring)


def _cmd_decide(args: argparse.Namespace) -> int:
    loaded = _load(args)
    x = _need_point(loaded)
    system = _system(loaded)
    if loaded.field.characteristic:
        print(
            f"warning: over F_{loaded.field.characteristic} the smooth-point "
            "precondition means exactly 'Jacobian rank equals codimension'",
            file=sys.stderr,
        )
    cert = reduce_to_ci(system, x)
    payload = serialize_certificate(cert)
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
    print(f"codimension: {cert.codim}")
    if cert.trace:
        print("trace: " + " ".join(str(t) for t in cert.trace))
    if isinstance(cert, CICertificate):
        print("decision: complete intersection")
        for g in cert.final_gens:
            print(f"generator: {g}")
        return 0
    print("decision: not a complete intersection")
    print(f"witness: {cert.witness}")
    return 3


def _cmd_groebner(args: argparse.Namespace) -> int:
    loaded = _load(args)
    basis = reduced_groebner(loaded.gens, ring=loaded.ring)
    for g in basis.elements:
        print(g)
    return 0


def _cmd_dim(args: argparse.Namespace) -> int:
    loaded = _load(args)
    print(projective_dimension(loaded.gens))
    return 0


def _cmd_member(args: argparse.Namespace) -> int:
    loaded = _load(args)
    f = _parse_poly(loaded, args.poly)
    member, record = ideal_member(f, loaded.gens)
    if not member:
        print("member: no")
        print(f"remainder: {record.remainder}")
        return 3
    print("member: yes")
    for g, q in zip(loaded.gens, record.quotients):
        if not q.is_zero():
            print(f"cofactor of {g}: {q}")
    return 0


def _cmd_trivial(args: argparse.Namespace) -> int:
    loaded = _load(args)
    system = _system(loaded)
    f = _parse_poly(loaded, args.poly)
    result = trivially_contains(system, f)
    if result.trivial:
        print("trivial: yes")
        for psi, cof in zip(result.members, result.cofactors):
            print(f"member {psi} cofactor {cof}")
        return 0
    print("trivial: no")
    print(f"remainder: {result.remainder}")
    return 3


def _cmd_check_iv(args: argparse.Namespace) -> int:
    loaded = _load(args)
    x = _need_point(loaded)
    system = _system(loaded)
    f = _parse_poly(loaded, args.poly)
    family = [
        _parse_poly(loaded, piece)
        for piece in args.family.split(";")
        if piece.strip()
    ]
    contained = check_condition_iv(f, family, x, system)
    print(f"contained: {'yes' if contained else 'no'}")
    if contained:
        # Tangent containment at the point is exactly what the criterion forbids.
        return 3
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    loaded = _load(args)
    try:
        cert_text = Path(args.cert).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {args.cert}: {exc}") from exc
    cert = parse_certificate(cert_text)
    if loaded.point is not None:
        x = loaded.point
    elif isinstance(cert, NonCICertificate):
        x = cert.point
    else:
        raise _UsageError("verifying this certificate needs a point")
    system = _system(loaded)
    verdict = verify_certificate(cert, system, x)
    print(f"verified: {'yes' if verdict else 'no'}")
    return 0 if verdict else 3


def _timeout_seconds() -> float:
    raw = os.environ.get(TIMEOUT_ENV_VAR)
    if raw is None:
        return DEFAULT_TIMEOUT_SECS
    try:
        value = float(raw)
        if value <= 0:
            raise ValueError
    except ValueError:
        print(
            f"warning: ignoring bad {TIMEOUT_ENV_VAR}={raw!r}; "
            f"using {DEFAULT_TIMEOUT_SECS:g}",
            file=sys.stderr,
        )
        return DEFAULT_TIMEOUT_SECS
    return value


def run_command(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        with basis_time_limit(_timeout_seconds()):
            return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except BuchbergerTimeout:
        print("error: computation exceeded the time limit", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # Precondition violations: point off the variety, not smooth, improper
        # ideal, non-member input, certificate/input mismatch, ...
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(run_command(sys.argv[1:]))
