"""Undirected simple graphs on dense vertex ids with bitset adjacency.

Each vertex ``v`` owns an integer whose bit ``u`` is set when ``uv`` is an
edge.  Graphs are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 1024


class GraphError(ValueError):
    """Raised for invalid graph parameters or malformed graph files."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    p: int
    adjacency: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        p, adj = self.p, self.adjacency
        if not 0 <= p <= MAX_VERTICES:
            raise GraphError(f"vertex count {p} outside 0..{MAX_VERTICES}")
        if len(adj) != p:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << p) - 1
        total = 0
        for v, nb in enumerate(adj):
            if nb & ~full or nb < 0:
                raise GraphError(f"vertex {v} has neighbors outside 0..{p - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
            total += nb.bit_count()
        object.__setattr__(self, "edge_count", total // 2)

    @classmethod
    def from_edges(cls, p: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= p <= MAX_VERTICES:
            raise GraphError(f"vertex count {p} outside 0..{MAX_VERTICES}")
        adj = [0] * p
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise GraphError(f"edge {u}-{v} out of range for p={p}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(p, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.p) for v in bits(self.adjacency[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: list[int]) -> Graph:
        """Image of this graph under vertex map ``v -> perm[v]``."""
        return Graph.from_edges(self.p, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.p
        edges = self.edges() + [(u + shift, v + shift) for u, v in other.edges()]
        return Graph.from_edges(self.p + other.p, edges)


def complete(p: int) -> Graph:
    if p < 0:
        raise GraphError("p must be non-negative")
    full = (1 << p) - 1
    return Graph(p, tuple(full ^ (1 << v) for v in range(p)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be at least 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(m: int) -> Graph:
    if m < 1:
        raise GraphError(f"path needs at least one vertex, got {m}")
    return Graph.from_edges(m, ((i, i + 1) for i in range(m - 1)))


def empty(p: int) -> Graph:
    return Graph(p, (0,) * p)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    adj = g.adjacency
    unseen = (1 << g.p) - 1
    out = []
    while unseen:
        start = unseen & -unseen
        comp = frontier = start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & ~comp
            comp |= frontier
        unseen &= ~comp
        out.append(list(bits(comp)))
    return out


def component_masks(g: Graph) -> list[int]:
    return [sum(1 << v for v in comp) for comp in components(g)]


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# -- edge-list file format -------------------------------------------------
#
#   <p>
#   u v        (0 <= u < v < p, one edge per line, no duplicates)
#   # comment lines allowed anywhere


def parse_graph(text: str) -> Graph:
    p = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if p is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphError(f"line {lineno}: expected a vertex count")
            p = nums[0]
            if p > MAX_VERTICES:
                raise GraphError(f"line {lineno}: vertex count {p} exceeds {MAX_VERTICES}")
            continue
        if len(nums) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        u, v = nums
        if not 0 <= u < v < p:
            raise GraphError(f"line {lineno}: edge must satisfy 0 <= u < v < {p}")
        if (u, v) in seen:
            raise GraphError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    if p is None:
        raise GraphError("missing vertex count line")
    return Graph.from_edges(p, edges)


def format_graph(g: Graph) -> str:
    lines = [str(g.p)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(g))
