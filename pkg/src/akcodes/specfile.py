"""Line-oriented ``key = value`` code specifications.

A record looks like::

    # comment
    name = row-n4
    k = 2
    n = 4
    S = 1,2
    T = 1
    generator = x^2+1
    expected_d = 2

``generator`` and ``vector`` may repeat.  Generators are skew polynomials
whose left-module span is taken; vectors are added by plain A_k-span (or by
F2-span when ``span = additive``).  A file may hold several records; each
``name`` line after the first starts a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .codes import AdditiveCode, Code
from .ring import MAX_K, format_subset, parse_subset
from .skewpoly import (
    PolyParseError,
    QuotientContext,
    SkewPolynomial,
    Vector,
    format_vector,
    parse_poly,
    parse_vector,
    span_from_generators,
)

SPAN_KINDS = ("ring", "additive")
_ORDER = ("name", "k", "n", "S", "T", "span", "generator", "vector", "expected_d", "notes")
_REPEATED = {"generator", "vector"}


class SpecParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<spec>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.source = source


@dataclass(frozen=True)
class CodeSpec:
    name: str
    k: int
    n: int
    S: frozenset[int] = frozenset()
    T: frozenset[int] = frozenset()
    generators: tuple[str, ...] = ()
    vectors: tuple[str, ...] = ()
    expected_d: int | None = None
    notes: str = ""
    span: str = "ring"

    def polynomials(self) -> list[SkewPolynomial]:
        return [parse_poly(g, self.k, self.S) for g in self.generators]

    def vector_values(self) -> list[Vector]:
        return [parse_vector(v, self.k) for v in self.vectors]

    def spanning_vectors(self) -> list[Vector]:
        out = list(self.vector_values())
        polys = self.polynomials()
        if polys:
            out.extend(span_from_generators(polys, QuotientContext(self.n, self.S, self.k)))
        return out

    def build(self) -> Code | AdditiveCode:
        if not self.generators and not self.vectors:
            raise ValueError(f"spec {self.name!r} has no generators")
        vecs = self.spanning_vectors()
        if self.span == "additive":
            return AdditiveCode.span(self.k, self.n, vecs)
        return Code(self.k, self.n, vecs)

    def dumps(self) -> str:
        out = [f"name = {self.name}", f"k = {self.k}", f"n = {self.n}",
               f"S = {format_subset(self.S)}", f"T = {format_subset(self.T)}"]
        if self.span != "ring":
            out.append(f"span = {self.span}")
        out += [f"generator = {g}" for g in self.generators]
        out += [f"vector = {v}" for v in self.vectors]
        if self.expected_d is not None:
            out.append(f"expected_d = {self.expected_d}")
        if self.notes:
            out.append(f"notes = {self.notes}")
        return "\n".join(out) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def spec_from_code(C: Code | AdditiveCode, name: str, S: Iterable[int] = (),
                   T: Iterable[int] = (), notes: str = "") -> CodeSpec:
    """A spec listing explicit vectors that span C."""
    if isinstance(C, AdditiveCode):
        vecs, span = C.f2_basis, "additive"
    else:
        vecs, span = C.f2_basis, "ring"
    return CodeSpec(name=name, k=C.k, n=C.n, S=frozenset(S), T=frozenset(T),
                    vectors=tuple(format_vector(v) for v in vecs), notes=notes, span=span)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _int_value(value: str, key: str, lineno: int, col: int, source: str, low: int = 1) -> int:
    try:
        v = int(value)
    except ValueError:
        raise SpecParseError(f"{key} must be an integer, got {value!r}", lineno, col, source) from None
    if v < low:
        raise SpecParseError(f"{key} must be at least {low}", lineno, col, source)
    return v


def _finish(fields: dict, source: str, start_line: int) -> CodeSpec:
    for key in ("k", "n"):
        if key not in fields:
            raise SpecParseError(f"missing required key {key!r}", start_line, 1, source)
    k, kline, kcol = fields["k"]
    n, _, _ = fields["n"]
    if k > MAX_K:
        raise SpecParseError(f"k={k} exceeds the supported maximum {MAX_K}", kline, kcol, source)
    subsets = {}
    for key in ("S", "T"):
        if key in fields:
            text, line, col = fields[key]
            try:
                subsets[key] = parse_subset(text, k)
            except ValueError as e:
                raise SpecParseError(str(e), line, col, source) from None
        else:
            subsets[key] = frozenset()
    gens = []
    for text, line, col in fields.get("generator", []):
        try:
            parse_poly(text, k)
        except PolyParseError as e:
            raise SpecParseError(str(e), line, col + e.pos, source) from None
        gens.append(text)
    vecs = []
    for text, line, col in fields.get("vector", []):
        try:
            v = parse_vector(text, k)
        except ValueError as e:
            raise SpecParseError(str(e), line, col, source) from None
        if len(v) != n:
            raise SpecParseError(f"vector has length {len(v)}, expected n={n}", line, col, source)
        vecs.append(text)
    span = fields.get("span", ("ring", 0, 0))
    if span[0] not in SPAN_KINDS:
        raise SpecParseError(f"span must be one of {', '.join(SPAN_KINDS)}", span[1], span[2], source)
    return CodeSpec(
        name=fields.get("name", ("unnamed",))[0], k=k, n=n, S=subsets["S"], T=subsets["T"],
        generators=tuple(gens), vectors=tuple(vecs),
        expected_d=fields["expected_d"][0] if "expected_d" in fields else None,
        notes=fields.get("notes", ("",))[0], span=span[0])


def loads_all(text: str, source: str = "<spec>") -> list[CodeSpec]:
    specs: list[CodeSpec] = []
    fields: dict = {}
    start = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise SpecParseError("expected 'key = value'", lineno, col, source)
        key_part, value_part = line.split("=", 1)
        key = key_part.strip()
        value = value_part.strip()
        col = len(key_part) + 2 + (len(value_part) - len(value_part.lstrip()))
        if key not in _ORDER:
            raise SpecParseError(f"unknown key {key!r}", lineno, len(key_part) - len(key_part.lstrip()) + 1,
                                 source)
        if key == "name" and fields:
            specs.append(_finish(fields, source, start))
            fields = {}
        if not fields:
            start = lineno
        if key not in _REPEATED and key in fields:
            raise SpecParseError(f"duplicate key {key!r}", lineno, 1, source)
        if key in ("k", "n", "expected_d"):
            fields[key] = (_int_value(value, key, lineno, col, source), lineno, col)
        elif key in _REPEATED:
            fields.setdefault(key, []).append((value, lineno, col))
        else:
            fields[key] = (value, lineno, col)
    if fields:
        specs.append(_finish(fields, source, start))
    return specs


def loads(text: str, source: str = "<spec>") -> CodeSpec:
    specs = loads_all(text, source)
    if len(specs) != 1:
        raise SpecParseError(f"expected exactly one spec, found {len(specs)}", 1, 1, source)
    return specs[0]


def load(path: str | Path) -> CodeSpec:
    return loads(Path(path).read_text(encoding="utf-8"), str(path))


def load_all(path: str | Path) -> list[CodeSpec]:
    return loads_all(Path(path).read_text(encoding="utf-8"), str(path))


def dumps_all(specs: Iterable[CodeSpec]) -> str:
    return "\n".join(s.dumps() for s in specs)


