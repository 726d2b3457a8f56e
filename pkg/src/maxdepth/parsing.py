"""Reading and writing ideals.

Two input syntaxes are accepted:

* a JSON document ``{"vars": 3, "names": [...], "gens": [[1,1,0], [0,1,1]]}``
  (``gens`` may also hold symbolic strings), the canonical interchange form;
* a symbolic string ``"x1*x2, x2^2*x3"``.

Errors are raised as ``ParseError`` carrying a line and column.
"""

from __future__ import annotations

import json
import re

from .errors import DomainError
from .ideal import MonomialIdeal


class ParseError(DomainError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(?P<exp>\d+))?|(?P<one>1))\s*")


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _variable_index(name: str, names: list[str] | None, nvars: int | None) -> int | None:
    if names is not None:
        return names.index(name) if name in names else None
    m = re.fullmatch(r"x(\d+)", name)
    if not m:
        return None
    i = int(m.group(1)) - 1
    if i < 0 or (nvars is not None and i >= nvars):
        return None
    return i


def parse_symbolic(text: str, nvars: int | None = None,
                   names: list[str] | None = None) -> MonomialIdeal:
    """Parse ``"x1*x2, x2^2*x3"``.  Without ``nvars`` the largest index used is taken."""
    terms: list[dict[int, int]] = []
    pos = 0
    if not text.strip():
        return MonomialIdeal(nvars or 1, (), tuple(names) if names else None)
    for piece in text.split(","):
        term: dict[int, int] = {}
        factors = piece.split("*")
        offset = pos
        for factor in factors:
            m = _TOKEN.fullmatch(factor)
            if not m:
                line, col = _position(text, offset)
                raise ParseError(f"cannot parse factor {factor.strip()!r}", line, col)
            if m.group("one"):
                offset += len(factor) + 1
                continue
            idx = _variable_index(m.group("name"), names, nvars)
            if idx is None:
                line, col = _position(text, offset + m.start("name"))
                raise ParseError(f"unknown variable {m.group('name')!r}", line, col)
            term[idx] = term.get(idx, 0) + int(m.group("exp") or 1)
            offset += len(factor) + 1
        if not term:
            line, col = _position(text, pos)
            raise ParseError("the unit ideal is not allowed", line, col)
        terms.append(term)
        pos += len(piece) + 1
    n = nvars if nvars is not None else len(names) if names else max(max(t) for t in terms) + 1
    gens = tuple(tuple(t.get(i, 0) for i in range(n)) for t in terms)
    return MonomialIdeal(n, gens, tuple(names) if names else None)


def _locate(text: str, key: str, index: int | None = None) -> tuple[int, int]:
    """Rough line/column of ``key`` (and its ``index``-th list element) in a JSON text."""
    at = text.find(f'"{key}"')
    if at < 0:
        return 1, 1
    if index is None:
        return _position(text, at)
    i = text.find("[", at)
    depth, count = 0, -1
    while 0 <= i < len(text):
        ch = text[i]
        if ch == "[":
            depth += 1
            if depth == 2:
                count += 1
                if count == index:
                    return _position(text, i)
        elif ch == '"' and depth == 1:
            count += 1
            if count == index:
                return _position(text, i)
            i = text.find('"', i + 1)
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
        i += 1
    return _position(text, at)


def parse_document(text: str) -> MonomialIdeal:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("ideal document must be a JSON object")
    nvars = doc.get("vars")
    if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 1:
        raise ParseError("'vars' must be a positive integer", *_locate(text, "vars"))
    names = doc.get("names")
    if names is not None:
        if not (isinstance(names, list) and all(isinstance(s, str) for s in names)) \
                or len(names) != nvars:
            raise ParseError(f"'names' must be a list of {nvars} strings", *_locate(text, "names"))
    gens = doc.get("gens")
    if isinstance(gens, str):
        return parse_symbolic(gens, nvars, names)
    if not isinstance(gens, list):
        raise ParseError("'gens' must be a list", *_locate(text, "gens"))
    vectors = []
    for k, g in enumerate(gens):
        where = _locate(text, "gens", k)
        if isinstance(g, str):
            vectors.extend(parse_symbolic(g, nvars, names).gens)
            continue
        if not (isinstance(g, list) and all(isinstance(e, int) and not isinstance(e, bool)
                                            for e in g)):
            raise ParseError(f"gens[{k}] must be a list of integers", *where)
        if len(g) != nvars:
            raise ParseError(f"gens[{k}] has length {len(g)}, expected {nvars}", *where)
        if any(e < 0 for e in g):
            raise ParseError(f"gens[{k}] has a negative exponent", *where)
        if not any(g):
            raise ParseError(f"gens[{k}] is the constant 1: the unit ideal is not allowed", *where)
        vectors.append(tuple(g))
    try:
        return MonomialIdeal(nvars, tuple(vectors), tuple(names) if names else None)
    except ParseError:
        raise
    except DomainError as exc:
        raise ParseError(str(exc), *_locate(text, "gens")) from None


def parse_ideal(text: str, nvars: int | None = None, names: list[str] | None = None) -> MonomialIdeal:
    if text.lstrip().startswith("{"):
        return parse_document(text)
    return parse_symbolic(text, nvars, names)


def ideal_document(I: MonomialIdeal) -> dict:
    doc: dict = {"vars": I.nvars}
    if I.names is not None:
        doc["names"] = list(I.names)
    doc["gens"] = [list(g) for g in I.gens]
    return doc


def dump_ideal(I: MonomialIdeal) -> str:
    return json.dumps(ideal_document(I))
