"""Edge-list text format.

One undirected edge per line as two whitespace-separated decimal ids.
Lines starting with ``#`` are comments; blank lines are skipped. Output is
canonical: ``u v`` with ``u < v``, lines sorted, trailing newline.
"""

from __future__ import annotations

import io as _io
import os
from typing import Iterable, TextIO, Union

from .errors import EdgeListParseError, ValidationError, ValidationKind
from .graph import Edge, Graph, Subgraph

Source = Union[str, os.PathLike, TextIO]


def parse_edge_list(lines: Iterable[str]) -> list[Edge]:
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(number, line, f"expected 2 ids, found {len(tokens)} tokens")
        if not all(t.isdigit() and t.isascii() for t in tokens):
            raise EdgeListParseError(number, line, "ids must be nonnegative decimal integers")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise ValidationError(ValidationKind.SELF_LOOP, f"line {number}: self-loop on node {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValidationError(
                ValidationKind.DUPLICATE_EDGE,
                f"line {number}: edge {key[0]} {key[1]} already listed on line {seen[key]}",
            )
        seen[key] = number
        edges.append(key)
    return edges


def load_edge_list(source: Source) -> Graph:
    """Read a graph; ``node_count`` is one more than the largest id seen."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            edges = parse_edge_list(fh)
    else:
        edges = parse_edge_list(source)
    return Graph.from_edges(edges)


def loads_edge_list(text: str) -> Graph:
    return load_edge_list(_io.StringIO(text))


def format_edges(edges: Iterable[Edge]) -> str:
    norm = sorted((u, v) if u < v else (v, u) for u, v in edges)
    return "".join(f"{u} {v}\n" for u, v in norm)


def dumps_edge_list(graph: Graph | Subgraph) -> str:
    """Canonical text; a :class:`Subgraph` is written with its original ids."""
    return format_edges(graph.edges())


def save_edge_list(graph: Graph | Subgraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_edge_list(graph))
