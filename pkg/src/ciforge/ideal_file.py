"""The line-oriented ``.ideal`` input format.

    # K3-ish example
    field: q
    vars: T0 T1 T2 T3
    point: 1 1 1 1
    gens:
    T0*T2 - T1^2
    T1*T3 - T2^2

Sections appear in that fixed order; ``point:`` is optional; ``#`` starts a
comment; at least one generator is required.  The field line also accepts
``fp 7919`` / ``fp:7919`` for prime fields.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .fields import Field, field_from_tag
from .parse import parse_polynomial
from .poly import Polynomial, PolynomialRing, ProjectivePoint


@dataclass(frozen=True)
class IdealFile:
    field: Field
    ring: PolynomialRing
    point: ProjectivePoint | None
    gens: tuple[Polynomial, ...]


@dataclass(frozen=True)
class _RawSections:
    field_text: str
    var_names: tuple[str, ...]
    point_words: tuple[str, ...] | None
    gen_lines: tuple[str, ...]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _split_sections(text: str) -> _RawSections:
    lines = [s for s in (_strip(line) for line in text.splitlines()) if s]
    index = 0

    def take(keyword: str) -> str | None:
        nonlocal index
        if index < len(lines) and lines[index].startswith(keyword + ":"):
            value = lines[index][len(keyword) + 1 :].strip()
            index += 1
            return value
        return None

    field_text = take("field")
    if field_text is None:
        raise ParseError("expected a 'field:' line first")
    vars_text = take("vars")
    if vars_text is None:
        raise ParseError("expected a 'vars:' line after 'field:'")
    point_text = take("point")
    if take("gens") is None:
        raise ParseError("expected a 'gens:' line introducing the generators")
    gen_lines = tuple(lines[index:])
    if not gen_lines:
        raise ParseError("need at least one generator expression after 'gens:'")
    return _RawSections(
        field_text,
        tuple(vars_text.split()),
        tuple(point_text.split()) if point_text is not None else None,
        gen_lines,
    )


def parse_ideal_file(
    text: str,
    *,
    field_override: str | None = None,
    point_override: str | None = None,
) -> IdealFile:
    """Parse ``.ideal`` content; overrides replace the file's field / point."""
    raw = _split_sections(text)
    field = field_from_tag(field_override if field_override is not None else raw.field_text)
    try:
        ring = PolynomialRing(field, raw.var_names)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc

    point_words = raw.point_words
    if point_override is not None:
        point_words = tuple(w for w in re.split(r"[,\s]+", point_override.strip()) if w)
    point = None
    if point_words is not None:
        if len(point_words) != ring.num_vars:
            raise ParseError(
                f"point has {len(point_words)} coordinates, expected {ring.num_vars}"
            )
        coords = tuple(field.scalar_from_str(w) for w in point_words)
        try:
            point = ProjectivePoint(coords)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    gens: list[Polynomial] = []
    for line in raw.gen_lines:
        gens.append(parse_polynomial(line, ring))
    return IdealFile(field, ring, point, tuple(gens))
