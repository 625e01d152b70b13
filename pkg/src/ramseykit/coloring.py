"""Edge colorings of complete graphs.

A coloring of ``K_p`` with ``r`` classes is stored as a flat upper-triangular
byte string.  The pair ``{u, v}`` with ``u < v`` lives at index

    v * (v - 1) // 2 + u

so pairs are ordered by their larger endpoint, then by the smaller one.  This
is also the order of the ``.rcol`` file format and of the exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from . import kernels
from .graph import Graph

CANONICAL_MAX_P = 12
MAX_CLASSES = 255
PALETTE = ("green", "red", "blue")
FORMAT_MAGIC = "RCOL"
FORMAT_VERSION = 1


class ColoringError(ValueError):
    pass


class MalformedColoringFile(ColoringError):
    pass


class UnsupportedSize(ColoringError):
    pass


def pair_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def class_name(i: int) -> str:
    return PALETTE[i] if i < len(PALETTE) else f"c{i}"


@dataclass(frozen=True)
class Coloring:
    p: int
    r: int
    assignment: bytes

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ColoringError("vertex count must be non-negative")
        if not 1 <= self.r <= MAX_CLASSES:
            raise ColoringError(f"class count must be in 1..{MAX_CLASSES}, got {self.r}")
        if len(self.assignment) != comb(self.p, 2):
            raise ColoringError(f"expected {comb(self.p, 2)} pair classes, got {len(self.assignment)}")
        if self.assignment and max(self.assignment) >= self.r:
            raise ColoringError(f"class index {max(self.assignment)} out of range for r={self.r}")

    @classmethod
    def from_function(cls, p: int, r: int, fn: Callable[[int, int], int]) -> Coloring:
        """Build from ``fn(u, v)`` called for every pair with ``u < v``."""
        return cls(p, r, bytes(fn(u, v) for v in range(p) for u in range(v)))

    @classmethod
    def monochrome(cls, p: int, r: int = 1) -> Coloring:
        return cls(p, r, bytes(comb(p, 2)))

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ColoringError("a vertex pair needs two distinct vertices")
        return self.assignment[pair_index(u, v)]

    def pairs(self) -> Iterable[tuple[int, int, int]]:
        """Yield ``(u, v, class)`` in storage order."""
        a = self.assignment
        k = 0
        for v in range(self.p):
            for u in range(v):
                yield u, v, a[k]
                k += 1

    def labels(self) -> list[str]:
        return [class_name(i) for i in range(self.r)]

    def class_sizes(self) -> list[int]:
        return [self.assignment.count(i) for i in range(self.r)]

    def matrix(self) -> list[bytearray]:
        m = [bytearray(self.p) for _ in range(self.p)]
        for u, v, c in self.pairs():
            m[u][v] = m[v][u] = c
        return m

    def permute(self, perm: list[int]) -> Coloring:
        """Image under the vertex map ``v -> perm[v]``."""
        inv = [0] * self.p
        for v, img in enumerate(perm):
            inv[img] = v
        color = self.color
        return Coloring.from_function(self.p, self.r, lambda u, v: color(inv[u], inv[v]))

    def relabel_classes(self, mapping: list[int], r: int | None = None) -> Coloring:
        table = bytes(mapping)
        return Coloring(self.p, self.r if r is None else r, self.assignment.translate(table.ljust(256, b"\0")))

    def induced(self, q: int) -> Coloring:
        """Sub-coloring on the first ``q`` vertices."""
        return Coloring(q, self.r, self.assignment[: comb(q, 2)])


def class_graph(c: Coloring, i: int) -> Graph:
    if not 0 <= i < c.r:
        raise ColoringError(f"class {i} out of range for r={c.r}")
    adj = [0] * c.p
    for u, v, k in c.pairs():
        if k == i:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(c.p, tuple(adj))


def merge_classes(c: Coloring, merge_set: Iterable[int]) -> tuple[Coloring, dict[int, int]]:
    """Recolor every class in ``merge_set`` to one new class.

    The merged class takes the smallest index of ``merge_set``; the other
    classes are compacted in their original relative order.  Returns the new
    coloring and the old-to-new class map (merged classes included).
    """
    merge = set(merge_set)
    if not merge:
        raise ColoringError("merge set must be non-empty")
    bad = [i for i in merge if not 0 <= i < c.r]
    if bad:
        raise ColoringError(f"class indices {sorted(bad)} out of range for r={c.r}")
    target = min(merge)
    remap: dict[int, int] = {}
    nxt = 0
    for old in range(c.r):
        if old in merge and old != target:
            continue
        remap[old] = nxt
        nxt += 1
    for old in merge:
        remap[old] = remap[target]
    table = [remap[i] for i in range(c.r)]
    return c.relabel_classes(table, c.r - len(merge) + 1), remap


def canonical_form(c: Coloring) -> tuple[bytes, list[int]]:
    """Lexicographically least assignment over all vertex relabelings.

    Returns the least assignment string and one vertex order achieving it;
    ``order[i]`` is the original vertex placed at position ``i``.
    """
    if c.p > CANONICAL_MAX_P:
        raise UnsupportedSize(f"canonical form supports p <= {CANONICAL_MAX_P}, got {c.p}")
    return kernels.canonical_form(c.assignment, c.p)


def canonical_key(c: Coloring) -> bytes:
    """Key equal for two colorings iff they differ by a vertex permutation."""
    form, _ = canonical_form(c)
    return bytes((c.p, c.r)) + form


def canonical_coloring(c: Coloring) -> Coloring:
    form, _ = canonical_form(c)
    return Coloring(c.p, c.r, form)


# -- file formats ------------------------------------------------------------


def format_coloring(c: Coloring) -> str:
    lines = [f"{FORMAT_MAGIC} {FORMAT_VERSION} {c.p} {c.r}"]
    a = c.assignment
    for v in range(1, c.p):
        start = v * (v - 1) // 2
        lines.append(" ".join(map(str, a[start:start + v])))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    pos = 0
    while pos < len(lines) and lines[pos].startswith("#"):
        pos += 1
    if pos == len(lines):
        raise MalformedColoringFile("missing RCOL header")
    header = lines[pos].split()
    if len(header) != 4 or header[0] != FORMAT_MAGIC:
        raise MalformedColoringFile(f"line {pos + 1}: expected 'RCOL 1 <p> <r>'")
    try:
        version, p, r = (int(x) for x in header[1:])
    except ValueError:
        raise MalformedColoringFile(f"line {pos + 1}: non-integer header field") from None
    if version != FORMAT_VERSION:
        raise MalformedColoringFile(f"unsupported format version {version}")
    if p < 0 or not 1 <= r <= MAX_CLASSES:
        raise MalformedColoringFile(f"line {pos + 1}: bad vertex or class count")
    body = lines[pos + 1:]
    if len(body) != max(p - 1, 0):
        raise MalformedColoringFile(f"expected {max(p - 1, 0)} rows after header, found {len(body)}")
    out = bytearray()
    for v, row in enumerate(body, 1):
        lineno = pos + 1 + v
        toks = row.split(" ")
        if len(toks) != v:
            raise MalformedColoringFile(f"line {lineno}: expected {v} entries, found {len(toks)}")
        for tok in toks:
            if not (tok.isascii() and tok.isdigit()) or tok != str(int(tok)):
                raise MalformedColoringFile(f"line {lineno}: bad class token {tok!r}")
            k = int(tok)
            if k >= r:
                raise MalformedColoringFile(f"line {lineno}: class {k} out of range for r={r}")
            out.append(k)
    return Coloring(p, r, bytes(out))


def load_coloring(path: str) -> Coloring:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_coloring(fh.read())


def save_coloring(c: Coloring, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_coloring(c))


def format_dot(c: Coloring, name: str = "coloring") -> str:
    """Graphviz text: one node per vertex, one colored edge per pair."""
    out = [f"graph {name} {{"]
    out.extend(f"  {v};" for v in range(c.p))
    pairs = sorted((u, v, k) for u, v, k in c.pairs())
    out.extend(f"  {u} -- {v} [color={class_name(k)}];" for u, v, k in pairs)
    out.append("}")
    return "\n".join(out) + "\n"
