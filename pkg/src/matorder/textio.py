"""Matrix and semigroup text formats, and DOT export of Hasse diagrams.

Matrix file::

    gauss 2 2
    1 1/2+i
    1/2-i 3

Semigroup file (Cayley table, optional labels)::

    2
    0 0
    0 1
    # label 0 zero
    # label 1 one
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Optional, Sequence

from .matrix import Matrix
from .scalar import DomainError, domain_from_tag
from .semigroup import FiniteSemigroup, Relation, hasse_edges


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1, source: str = "<input>"):
        self.line = line
        self.col = col
        self.source = source
        super().__init__(f"{source}:{line}:{col}: {message}")


def _tokens(line: str):
    """(column, token) pairs, 1-based columns."""
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _content_lines(text: str):
    for no, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield no, line


def parse_matrix(text: str, source: str = "<input>") -> Matrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", 1, source=source)
    no, header = lines[0]
    toks = _tokens(header)
    if len(toks) != 3:
        raise ParseError("header must be 'domain rows cols'", no, 1, source)
    (c0, tag), (c1, r_tok), (c2, c_tok) = toks
    try:
        dom = domain_from_tag(tag)
    except DomainError as exc:
        raise ParseError(str(exc), no, c0, source) from None
    dims = []
    for col, tok in ((c1, r_tok), (c2, c_tok)):
        if not re.fullmatch(r"\d+", tok) or int(tok) < 1:
            raise ParseError(f"dimension must be a positive integer, got {tok!r}", no, col, source)
        dims.append(int(tok))
    rows, cols = dims
    body = lines[1:]
    if len(body) != rows:
        where = body[rows][0] if len(body) > rows else (body[-1][0] + 1 if body else no + 1)
        raise ParseError(f"expected {rows} rows, found {len(body)}", where, 1, source)
    values = []
    for no, line in body:
        toks = _tokens(line)
        if len(toks) != cols:
            raise ParseError(f"expected {cols} entries, found {len(toks)}", no, 1, source)
        for col, tok in toks:
            try:
                values.append(dom.parse(tok))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(str(exc), no, col, source) from None
    try:
        return Matrix.from_flat(rows, cols, values, dom)
    except DomainError as exc:
        raise ParseError(str(exc), body[0][0], 1, source) from None


def read_matrix(path) -> Matrix:
    p = Path(path)
    return parse_matrix(p.read_text(), source=str(p))


def format_matrix(A: Matrix) -> str:
    return A.to_text()


def parse_semigroup(text: str, source: str = "<input>") -> FiniteSemigroup:
    labels: dict[int, str] = {}
    rows: list[tuple[int, str]] = []
    for no, line in _content_lines(text):
        stripped = line.strip()
        if stripped.startswith("#"):
            m = re.fullmatch(r"#\s*label\s+(\d+)\s+(\S.*)", stripped)
            if m:
                labels[int(m.group(1))] = m.group(2).strip()
            continue
        rows.append((no, line))
    if not rows:
        raise ParseError("empty semigroup file", 1, source=source)
    no, first = rows[0]
    if not re.fullmatch(r"\s*\d+\s*", first) or int(first) < 1:
        raise ParseError("first line must be the positive element count", no, 1, source)
    n = int(first)
    body = rows[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} table rows, found {len(body)}",
                         body[-1][0] if body else no, 1, source)
    table = []
    for no, line in body:
        toks = _tokens(line)
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", no, 1, source)
        row = []
        for col, tok in toks:
            if not re.fullmatch(r"\d+", tok) or int(tok) >= n:
                raise ParseError(f"entry must be an element index in [0, {n}), got {tok!r}", no, col, source)
            row.append(int(tok))
        table.append(row)
    for i in labels:
        if i >= n:
            raise ParseError(f"label index {i} out of range", 1, 1, source)
    names = [labels.get(i, str(i)) for i in range(n)] if labels else None
    return FiniteSemigroup(table, labels=names)


def read_semigroup(path) -> FiniteSemigroup:
    p = Path(path)
    return parse_semigroup(p.read_text(), source=str(p))


def format_semigroup(S: FiniteSemigroup) -> str:
    lines = [str(S.size)]
    lines += [" ".join(str(int(v)) for v in row) for row in S.table]
    if S.labels is not None:
        lines += [f"# label {i} {name}" for i, name in enumerate(S.labels)]
    return "\n".join(lines) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(S: FiniteSemigroup, R: Relation, name: str = "hasse",
           edges: Optional[Sequence[tuple[int, int]]] = None) -> str:
    """DOT digraph of the covering pairs of R, smaller elements at the bottom."""
    if edges is None:
        edges = hasse_edges(S, R)
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(S.size):
        out.append(f"  n{i} [label={_dot_quote(S.label(i))}];")
    for i, j in sorted(edges):
        out.append(f"  n{i} -> n{j};")
    out.append("}")
    return "\n".join(out) + "\n"
