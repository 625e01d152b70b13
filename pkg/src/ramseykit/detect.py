"""Monochromatic target detection (non-induced subgraph containment).

Every detector returns a :class:`Witness` or ``None``.  The search order is
fixed, so a given input always yields the same witness.  The low-level
``*_through_edge`` helpers work on raw adjacency lists and look only for
copies using one specified edge; the exhaustive search calls them after
each new edge assignment.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .coloring import Coloring, class_graph
from .graph import Graph, bits, component_masks, is_connected
from .targets import Clique, Cycle, General, Path, Target, TargetSpec

DEFAULT_EXPANSION_BUDGET = 10**8


class InvalidPatternError(ValueError):
    pass


class TargetCountMismatch(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    def __init__(self, expansions: int) -> None:
        super().__init__(f"node-expansion budget exhausted after {expansions} expansions")
        self.expansions = expansions


@dataclass(frozen=True)
class Witness:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    class_index: Optional[int] = None

    def format(self, label: str = "") -> str:
        head = "witness" if self.class_index is None else f"witness class {self.class_index}"
        if label:
            head += f" ({label})"
        return "\n".join([
            head,
            "vertices: " + " ".join(map(str, self.vertices)),
            "edges: " + " ".join(f"{u}-{v}" for u, v in self.edges),
        ])


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# -- cliques -----------------------------------------------------------------


def color_bound(adj: Sequence[int], cand: int) -> int:
    """Greedy coloring of ``cand``; the color count bounds its clique number."""
    colors = 0
    while cand:
        colors += 1
        q = cand
        while q:
            v = (q & -q).bit_length() - 1
            cand &= ~(1 << v)
            q &= ~(1 << v) & ~adj[v]
    return colors


def clique_in(adj: Sequence[int], cand: int, k: int) -> Optional[list[int]]:
    """Lexicographically least ``k``-clique inside the vertex set ``cand``."""
    if k <= 0:
        return []
    if cand.bit_count() < k:
        return None
    if k == 1:
        return [(cand & -cand).bit_length() - 1]
    if k >= 3 and color_bound(adj, cand) < k:
        return None
    rest = cand
    while rest:
        if rest.bit_count() < k:
            return None
        v = (rest & -rest).bit_length() - 1
        rest ^= 1 << v
        sub = clique_in(adj, rest & adj[v], k - 1)
        if sub is not None:
            return [v] + sub
    return None


def contains_clique(g: Graph, k: int) -> Optional[Witness]:
    if k < 1:
        raise ValueError("clique size must be at least 1")
    found = clique_in(g.adjacency, (1 << g.p) - 1, k)
    if found is None:
        return None
    return Witness(tuple(found), tuple((found[i], found[j]) for j in range(k) for i in range(j)))


def clique_through_edge(adj: Sequence[int], u: int, v: int, k: int) -> Optional[list[int]]:
    if k == 2:
        return [u, v]
    rest = clique_in(adj, adj[u] & adj[v], k - 2)
    return None if rest is None else [u, v] + rest


# -- cycles ------------------------------------------------------------------


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nb = 0
        for w in bits(frontier):
            nb |= adj[w]
        frontier = nb & allowed & ~seen
        seen |= frontier
    return seen


class _Counter:
    __slots__ = ("n", "limit")

    def __init__(self, limit: int) -> None:
        self.n = 0
        self.limit = limit

    def tick(self) -> None:
        self.n += 1
        if self.n > self.limit:
            raise BudgetExhausted(self.n)


def _path_to(adj: Sequence[int], walk: list[int], goal_nb: int, allowed: int, left: int,
              counter: _Counter) -> bool:
    """Extend ``walk`` by ``left`` vertices from ``allowed``; the last one must lie in ``goal_nb``."""
    counter.tick()
    cur = walk[-1]
    if left == 0:
        return bool(goal_nb >> cur & 1)
    reach = _reach(adj, cur, allowed)
    region = reach & ~(1 << cur)
    if region.bit_count() < left or not region & goal_nb:
        return False
    for w in bits(adj[cur] & allowed):
        walk.append(w)
        if _path_to(adj, walk, goal_nb, allowed & ~(1 << w), left - 1, counter):
            return True
        walk.pop()
    return False


def _cycle_witness(walk: list[int]) -> Witness:
    n = len(walk)
    return Witness(tuple(walk), tuple(_edge(walk[i], walk[(i + 1) % n]) for i in range(n)))


def contains_cycle_exact(g: Graph, n: int,
                         budget: int = DEFAULT_EXPANSION_BUDGET) -> Optional[Witness]:
    """A cycle on exactly ``n`` vertices, if any.

    Components with fewer than ``n`` vertices are skipped outright.  Within a
    component the cycle's least vertex is fixed first and paths are grown
    through larger vertices only, pruned when too few vertices remain
    reachable.  Raises :class:`BudgetExhausted` past ``budget`` expansions.
    """
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    adj = g.adjacency
    counter = _Counter(budget)
    for comp in component_masks(g):
        if comp.bit_count() < n:
            continue
        live = comp
        for s in bits(comp):
            live &= ~(1 << s)
            if live.bit_count() < n - 1 or (adj[s] & live).bit_count() < 2:
                continue
            walk = [s]
            if _path_to(adj, walk, adj[s] & live, live, n - 1, counter):
                return _cycle_witness(walk)
    return None


def cycle_through_edge(adj: Sequence[int], u: int, v: int, n: int, allowed: int,
                       counter: Optional[_Counter] = None) -> Optional[list[int]]:
    """An ``n``-cycle through edge ``uv`` using vertices of ``allowed``."""
    counter = counter or _Counter(DEFAULT_EXPANSION_BUDGET)
    allowed &= ~(1 << u) & ~(1 << v)
    walk = [u, v]
    if n == 3:
        both = adj[u] & adj[v] & allowed
        return None if not both else [u, v, (both & -both).bit_length() - 1]
    if _path_to(adj, walk, adj[u] & allowed, allowed, n - 2, counter):
        return walk
    return None


# -- general patterns --------------------------------------------------------


def _bfs_order(pattern: Graph, roots: Sequence[int]) -> list[int]:
    padj = pattern.adjacency
    order = list(roots)
    placed = 0
    for r in roots:
        placed |= 1 << r
    i = 0
    while len(order) < pattern.p:
        if i == len(order):
            raise InvalidPatternError("pattern must be connected")
        nbs = sorted(bits(padj[order[i]] & ~placed), key=lambda x: (-pattern.degree(x), x))
        for x in nbs:
            order.append(x)
            placed |= 1 << x
        i += 1
    return order


def _match(adj: Sequence[int], host_p: int, pattern: Graph, order: list[int],
           pre: dict[int, int], allowed: int, counter: _Counter) -> Optional[dict[int, int]]:
    padj = pattern.adjacency
    pdeg = [pattern.degree(x) for x in range(pattern.p)]
    mapping = dict(pre)
    used = 0
    for h in pre.values():
        used |= 1 << h
    start = len(pre)

    def step(i: int) -> bool:
        nonlocal used
        counter.tick()
        if i == len(order):
            return True
        x = order[i]
        cand = allowed & ~used
        for y in bits(padj[x]):
            if y in mapping:
                cand &= adj[mapping[y]]
        for h in bits(cand):
            if adj[h].bit_count() < pdeg[x]:
                continue
            mapping[x] = h
            used |= 1 << h
            if step(i + 1):
                return True
            used &= ~(1 << h)
            del mapping[x]
        return False

    return mapping if step(start) else None


def _pattern_witness(pattern: Graph, mapping: dict[int, int]) -> Witness:
    verts = tuple(mapping[x] for x in range(pattern.p))
    return Witness(verts, tuple(_edge(mapping[a], mapping[b]) for a, b in pattern.edges()))


def _root(pattern: Graph) -> int:
    return max(range(pattern.p), key=lambda x: (pattern.degree(x), -x))


def contains_subgraph(g: Graph, pattern: Graph,
                      budget: int = DEFAULT_EXPANSION_BUDGET) -> Optional[Witness]:
    """Injective, adjacency-preserving map from ``pattern`` into ``g``.

    Witness vertex ``i`` is the host image of pattern vertex ``i``.
    """
    if pattern.p < 1 or not is_connected(pattern):
        raise InvalidPatternError("pattern must be a connected graph with at least one vertex")
    if pattern.p > g.p or pattern.edge_count > g.edge_count:
        return None
    order = _bfs_order(pattern, [_root(pattern)])
    counter = _Counter(budget)
    adj = g.adjacency
    for comp in component_masks(g):
        if comp.bit_count() < pattern.p:
            continue
        found = _match(adj, g.p, pattern, order, {}, comp, counter)
        if found is not None:
            return _pattern_witness(pattern, found)
    return None


def subgraph_through_edge(adj: Sequence[int], pattern: Graph, u: int, v: int, allowed: int,
                          counter: Optional[_Counter] = None) -> Optional[dict[int, int]]:
    """Copy of ``pattern`` whose image uses host edge ``uv``."""
    counter = counter or _Counter(DEFAULT_EXPANSION_BUDGET)
    allowed &= ~(1 << u) & ~(1 << v)
    for a, b in pattern.edges():
        for x, y in ((a, b), (b, a)):
            order = _bfs_order(pattern, [x, y])
            found = _match(adj, len(adj), pattern, order, {x: u, y: v}, allowed, counter)
            if found is not None:
                return found
    return None


# -- dispatch ----------------------------------------------------------------


def find_target(g: Graph, target: Target,
                budget: int = DEFAULT_EXPANSION_BUDGET) -> Optional[Witness]:
    if isinstance(target, Clique):
        return contains_clique(g, target.k)
    if isinstance(target, Cycle):
        return contains_cycle_exact(g, target.n, budget)
    if isinstance(target, (Path, General)):
        return contains_subgraph(g, target.graph(), budget)
    raise TypeError(f"unknown target {target!r}")


def verify_coloring(c: Coloring, t: TargetSpec,
                    budget: int = DEFAULT_EXPANSION_BUDGET) -> Optional[Witness]:
    """First monochromatic copy of a class's target, scanning classes in order.

    ``None`` means the coloring avoids every target.
    """
    if len(t) != c.r:
        raise TargetCountMismatch(f"{len(t)} targets for {c.r} color classes")
    for i, target in enumerate(t):
        w = find_target(class_graph(c, i), target, budget)
        if w is not None:
            return replace(w, class_index=i)
    return None


def check_witness(g: Graph, w: Witness, target: Target) -> bool:
    """Re-validate a witness from scratch against its host graph."""
    verts = w.vertices
    if len(set(verts)) != len(verts) or any(not 0 <= v < g.p for v in verts):
        return False
    vset = set(verts)
    edges = {_edge(u, v) for u, v in w.edges}
    if len(edges) != len(w.edges):
        return False
    for u, v in edges:
        if u not in vset or v not in vset or not g.has_edge(u, v):
            return False
    if isinstance(target, Clique):
        return len(verts) == target.k and edges == {
            _edge(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]}
    if isinstance(target, Cycle):
        n = target.n
        return (len(verts) == n and len(edges) == n
                and edges == {_edge(verts[i], verts[(i + 1) % n]) for i in range(n)})
    pattern = target.graph()
    if len(verts) != pattern.p:
        return False
    return edges == {_edge(verts[a], verts[b]) for a, b in pattern.edges()}
