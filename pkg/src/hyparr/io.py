"""Plain-text formats for arrangements and graphs.

Arrangement file::

    # comment
    dim 2
    1 0 | 0
    0 1 | 0
    1 1 | 1

Graph file::

    vertices 3
    1 2
    2 3
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .arrangement import Arrangement
from .errors import ArrangementError, ParseError
from .exact_math import format_rational
from .graph import Graph


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _rational(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {lineno}: {tok!r} is not a rational") from None


def parse_arrangement(text: str) -> Arrangement:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty arrangement file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit():
        raise ParseError(f"line {lineno}: expected 'dim <d>', got {head!r}")
    d = int(parts[1])
    rows = []
    for lineno, line in lines[1:]:
        if line.count("|") != 1:
            raise ParseError(f"line {lineno}: expected 'c_1 ... c_d | a'")
        lhs, rhs = line.split("|")
        coeffs = [_rational(t, lineno) for t in lhs.split()]
        rhs_toks = rhs.split()
        if len(coeffs) != d or len(rhs_toks) != 1:
            raise ParseError(f"line {lineno}: expected {d} coefficients and one offset")
        rows.append(coeffs + [_rational(rhs_toks[0], lineno)])
    try:
        return Arrangement.from_rows(d, rows)
    except ArrangementError as exc:
        raise ParseError(str(exc)) from exc


def format_arrangement(A: Arrangement) -> str:
    out = [f"dim {A.dim}"]
    for h, lab in zip(A, A.labels):
        out.append(" ".join(format_rational(c) for c in h.normal) + " | " + format_rational(h.offset) + f"  # {lab}")
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "vertices" or not parts[1].isdigit():
        raise ParseError(f"line {lineno}: expected 'vertices <n>', got {head!r}")
    n = int(parts[1])
    edges = []
    for lineno, line in lines[1:]:
        toks = line.split()
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise ParseError(f"line {lineno}: expected 'i j'")
        edges.append((int(toks[0]), int(toks[1])))
    try:
        return Graph(n, tuple(edges))
    except ArrangementError as exc:
        raise ParseError(str(exc)) from exc


def load_arrangement(path) -> Arrangement:
    return parse_arrangement(Path(path).read_text())


def load_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())
