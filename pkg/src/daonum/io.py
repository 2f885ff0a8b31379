"""Reading and writing ideal documents.

Text form, one directive per line (blank lines and ``#`` comments ignored)::

    ring x y z
    gens x^2*y, y*z^3, z^2

JSON form::

    {"vars": ["x", "y", "z"], "gens": [[2, 1, 0], [0, 1, 3], [0, 0, 2]]}
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import ParseError
from .ideal import MonomialIdeal, Ring

_FACTOR = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*)\s*(?:\^\s*(-?\d+))?\s*")


@dataclass(frozen=True)
class IdealDocument:
    ring: Ring
    gens: tuple  # as written, before minimalization
    source: str  # "text" or "json"

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, self.gens)


def parse_ideal(data: str, fmt: str = "auto") -> IdealDocument:
    if fmt == "auto":
        fmt = "json" if data.lstrip().startswith("{") else "text"
    if fmt == "json":
        return _parse_json(data)
    if fmt == "text":
        return _parse_text(data)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_monomial(ring: Ring, text: str, line: int, col: int) -> tuple:
    body = text.strip()
    lead = col + (len(text) - len(text.lstrip()))
    if not body:
        raise ParseError("empty monomial", line, lead)
    if body == "1":
        raise ParseError("the unit monomial 1 generates the whole ring; a proper ideal is required", line, lead)
    exps = [0] * ring.n
    pos = 0
    for k, factor in enumerate(text.split("*")):
        fcol = col + pos
        pos += len(factor) + 1
        m = _FACTOR.fullmatch(factor)
        if not m:
            raise ParseError(f"malformed factor {factor.strip()!r}", line, fcol + (len(factor) - len(factor.lstrip())))
        name, exp = m.group(1), m.group(2)
        if name not in ring.var_names:
            raise ParseError(f"unknown variable {name!r}", line, fcol + factor.index(name))
        e = 1 if exp is None else int(exp)
        if e <= 0:
            raise ParseError(f"exponent must be a positive integer, got {exp}", line, fcol + factor.index("^"))
        exps[ring.index(name)] += e
    return tuple(exps)


def _parse_text(data: str) -> IdealDocument:
    ring = None
    gens = None
    for lineno, raw in enumerate(data.splitlines(), start=1):
        stripped = raw.split("#", 1)[0]
        if not stripped.strip():
            continue
        indent = len(stripped) - len(stripped.lstrip())
        keyword, _, rest = stripped.strip().partition(" ")
        rest_col = indent + len(keyword) + 2
        if keyword == "ring":
            if ring is not None:
                raise ParseError("duplicate 'ring' line", lineno, indent + 1)
            names = rest.split()
            if not names:
                raise ParseError("'ring' needs at least one variable name", lineno, indent + 1)
            try:
                ring = Ring(tuple(names))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, rest_col) from None
        elif keyword == "gens":
            if ring is None:
                raise ParseError("'gens' must come after 'ring'", lineno, indent + 1)
            if gens is not None:
                raise ParseError("duplicate 'gens' line", lineno, indent + 1)
            if not rest.strip():
                raise ParseError("empty generator list; the zero ideal is not supported", lineno, rest_col)
            gens = []
            offset = stripped.index(rest, indent + len(keyword))
            for piece in rest.split(","):
                gens.append(_parse_monomial(ring, piece, lineno, offset + 1))
                offset += len(piece) + 1
        else:
            raise ParseError(f"expected 'ring' or 'gens', got {keyword!r}", lineno, indent + 1)
    if ring is None:
        raise ParseError("missing 'ring' line")
    if gens is None:
        raise ParseError("missing 'gens' line")
    return IdealDocument(ring, tuple(gens), "text")


def _parse_json(data: str) -> IdealDocument:
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "vars" not in doc or "gens" not in doc:
        raise ParseError('expected an object with "vars" and "gens"')
    names = doc["vars"]
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise ParseError('"vars" must be a list of strings')
    try:
        ring = Ring(tuple(names))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    raw = doc["gens"]
    if not isinstance(raw, list):
        raise ParseError('"gens" must be a list of exponent vectors')
    if not raw:
        raise ParseError("empty generator list; the zero ideal is not supported")
    gens = []
    for k, g in enumerate(raw):
        if not isinstance(g, list) or len(g) != ring.n:
            raise ParseError(f"generator {k} must be a list of {ring.n} integers")
        if not all(isinstance(e, int) and not isinstance(e, bool) for e in g):
            raise ParseError(f"generator {k} has a non-integer exponent")
        if any(e < 0 for e in g):
            raise ParseError(f"generator {k} has a negative exponent")
        if not any(g):
            raise ParseError(f"generator {k} is the unit monomial; a proper ideal is required")
        gens.append(tuple(g))
    return IdealDocument(ring, tuple(gens), "json")


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.var_names), "gens": [list(g) for g in I.gens]}


def dumps_ideal(I: MonomialIdeal) -> str:
    """Canonical JSON: minimal generators in graded-lex order, sorted keys."""
    return json.dumps(ideal_to_json(I), sort_keys=True, separators=(",", ":"))


def ideal_to_text(I: MonomialIdeal) -> str:
    return f"ring {' '.join(I.ring.var_names)}\ngens {', '.join(I.ring.format(g) for g in I.gens)}\n"
