"""Line-oriented text formats.

Graph files are DIMACS-like::

    c optional comment
    p edge <n> <m>
    e <u> <v>            (1-based, m lines)

Cover files list fibre sizes, then one line per base edge::

    l <v> <size>                     (1-based vertex)
    m <u> <v> <i>:<j> [<i>:<j> ...]  (0-based colour indices)
    t <v> <i>                        (transversal, output only)

The writer emits an ``m`` line for every base edge, even an empty one, so a
cover file also pins down its base graph.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .dp import Cover, build_cover
from .errors import InputError
from .graph import Graph, build_graph


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        yield lineno, parts


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer, got {token!r}") from None


def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, parts in _lines(text):
        if parts[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"line {lineno}: expected 'p edge <n> <m>'")
            n, m = _int(parts[2], lineno), _int(parts[3], lineno)
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"line {lineno}: endpoint out of range 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise InputError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise InputError("missing 'p edge' line")
    if len(edges) != m:
        raise InputError(f"problem line announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))


def parse_cover(text: str, base: Graph | None = None) -> Cover:
    sizes: dict[int, int] = {}
    matchings: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for lineno, parts in _lines(text):
        tag = parts[0]
        if tag == "l":
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'l <v> <size>'")
            v = _int(parts[1], lineno) - 1
            if v < 0:
                raise InputError(f"line {lineno}: vertices are 1-based")
            sizes[v] = _int(parts[2], lineno)
        elif tag == "m":
            if len(parts) < 3:
                raise InputError(f"line {lineno}: expected 'm <u> <v> <i>:<j> ...'")
            u, v = _int(parts[1], lineno) - 1, _int(parts[2], lineno) - 1
            pairs = matchings.setdefault((u, v), [])
            for token in parts[3:]:
                left, sep, right = token.partition(":")
                if not sep:
                    raise InputError(f"line {lineno}: bad pair {token!r}")
                pairs.append((_int(left, lineno), _int(right, lineno)))
        elif tag in ("t", "p", "e"):
            continue
        else:
            raise InputError(f"line {lineno}: unknown record {tag!r}")
    n = base.n if base is not None else (max(sizes) + 1 if sizes else 0)
    if set(sizes) != set(range(n)):
        raise InputError(f"cover must give a size for each of the {n} vertices")
    if base is None:
        base = build_graph(n, matchings.keys())
    return build_cover(base, [sizes[v] for v in range(n)], matchings)


def format_cover(cover: Cover, transversal: Sequence[int] | None = None) -> str:
    lines = [f"l {v + 1} {s}" for v, s in enumerate(cover.sizes)]
    for u, v in cover.base.edges():
        pairs = sorted(cover.matchings.get((u, v), ()))
        tail = "".join(f" {i}:{j}" for i, j in pairs)
        lines.append(f"m {u + 1} {v + 1}{tail}")
    if transversal is not None:
        lines += [f"t {v + 1} {c}" for v, c in enumerate(transversal)]
    return "\n".join(lines) + "\n"


def read_cover(path: str | Path, base: Graph | None = None) -> Cover:
    return parse_cover(Path(path).read_text(), base)
