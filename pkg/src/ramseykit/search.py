"""Exhaustive search for small Ramsey numbers.

Colorings are grown one vertex at a time.  Extending a coloring of ``K_q``
to ``K_{q+1}`` assigns the ``q`` new edges in storage order; after every
assignment the affected class is checked for a target copy through the new
edge, and the branch dies on a hit.  Each complete extension is reduced to a
canonical representative (vertex relabeling, plus swaps of classes that share
a target), so every level holds one coloring per isomorphism class.

``K_p`` is *forced* when level ``p`` comes out empty.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Optional

from .coloring import CANONICAL_MAX_P, Coloring, format_coloring
from .construct import RamseyParams, known_kappa, ramsey_lower_bound
from .detect import (_Counter, clique_through_edge, cycle_through_edge, subgraph_through_edge,
                     verify_coloring)
from .kernels import canonical_form
from .targets import Clique, Cycle, Target, TargetSpec

FORCED = "forced"
AVOIDABLE = "avoidable"
BUDGET_EXHAUSTED = "budget-exhausted"

EXACT = "exact"
LOWER_BOUND_ONLY = "lower-bound-only"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Budget:
    nodes: Optional[int] = None
    seconds: Optional[float] = None


class _OutOfBudget(Exception):
    pass


@dataclass
class SearchStats:
    nodes: int = 0
    ruled_out: int = 0
    seconds: float = 0.0
    level_sizes: dict[int, int] = field(default_factory=dict)


@dataclass
class Decision:
    kind: str
    witness: Optional[Coloring] = None
    stats: SearchStats = field(default_factory=SearchStats)


@dataclass
class SearchOutcome:
    kind: str
    targets: TargetSpec
    value: Optional[int] = None
    bound: Optional[int] = None
    witness: Optional[Coloring] = None
    best_lower: Optional[int] = None
    best_upper_tried: Optional[int] = None
    start: Optional[int] = None
    stats: SearchStats = field(default_factory=SearchStats)

    def headline(self) -> str:
        if self.kind == EXACT:
            return f"Exact R = {self.value}"
        if self.kind == LOWER_BOUND_ONLY:
            return f"Lower bound R >= {self.bound}"
        return f"Exhausted: R >= {self.best_lower}, budget ran out at p = {self.best_upper_tried}"

    def report(self, timing: bool = False) -> str:
        lines = [self.headline(), f"targets: {self.targets}"]
        if self.start is not None:
            lines.append(f"construction lower bound: {self.start}")
        sizes = " ".join(f"{p}:{n}" for p, n in sorted(self.stats.level_sizes.items()))
        lines.append(f"avoiding colorings per p (up to isomorphism): {sizes}")
        lines.append(f"nodes expanded: {self.stats.nodes}")
        lines.append(f"branches ruled out: {self.stats.ruled_out}")
        if timing:
            lines.append(f"wall time: {self.stats.seconds:.3f} s")
        if self.witness is not None:
            lines.append(f"witness coloring on {self.witness.p} vertices:")
            lines.append(format_coloring(self.witness).rstrip("\n"))
        return "\n".join(lines) + "\n"


def _checker(target: Target) -> Callable[[list[int], int, int], bool]:
    if isinstance(target, Clique):
        k = target.k
        return lambda adj, u, v: clique_through_edge(adj, u, v, k) is not None
    counter = _Counter(float("inf"))
    if isinstance(target, Cycle):
        n = target.n
        return lambda adj, u, v: cycle_through_edge(
            adj, u, v, n, (1 << len(adj)) - 1, counter) is not None
    pattern = target.graph()
    return lambda adj, u, v: subgraph_through_edge(
        adj, pattern, u, v, (1 << len(adj)) - 1, counter) is not None


def _class_tables(t: TargetSpec) -> list[bytes]:
    """Translation tables for class permutations that preserve the targets."""
    groups: dict[Target, list[int]] = {}
    for i, target in enumerate(t):
        groups.setdefault(target, []).append(i)
    tables = []
    group_list = list(groups.values())
    for choice in product(*(permutations(g) for g in group_list)):
        table = list(range(256))
        for src, dst in zip(group_list, choice):
            for a, b in zip(src, dst):
                table[a] = b
        tables.append(bytes(table))
    return tables


class _Extender:
    """Per-process state for growing colorings by one vertex."""

    def __init__(self, t: TargetSpec) -> None:
        self.r = len(t)
        self.checks = [_checker(target) for target in t]
        self.tables = _class_tables(t)

    def key(self, tri: bytes, p: int) -> bytes:
        if p > CANONICAL_MAX_P:
            return tri
        if len(self.tables) == 1:
            return canonical_form(tri, p)[0]
        return min(canonical_form(tri.translate(tab), p)[0] for tab in self.tables)

    def extend(self, tri: bytes, q: int, node_limit: float, first_only: bool):
        """All target-free extensions of ``tri`` (a coloring of K_q) to K_{q+1}.

        Returns ``(found, nodes, ruled_out)`` where ``found`` maps key to
        representative (or is a one-item list of raw extensions when
        ``first_only``).
        """
        r = self.r
        adjs = [[0] * (q + 1) for _ in range(r)]
        k = 0
        for v in range(q):
            for u in range(v):
                a = adjs[tri[k]]
                a[u] |= 1 << v
                a[v] |= 1 << u
                k += 1
        row = bytearray(q)
        checks = self.checks
        found: dict[bytes, bytes] = {}
        raw: list[bytes] = []
        nodes = 0
        ruled = 0
        bit_v = 1 << q

        def rec(j: int) -> bool:
            nonlocal nodes, ruled
            if j == q:
                ext = tri + bytes(row)
                if first_only:
                    raw.append(ext)
                    return True
                key = self.key(ext, q + 1)
                if key not in found:
                    found[key] = key if q + 1 <= CANONICAL_MAX_P else ext
                return False
            bit_j = 1 << j
            for c in range(r):
                nodes += 1
                if nodes > node_limit:
                    raise _OutOfBudget
                a = adjs[c]
                a[j] |= bit_v
                a[q] |= bit_j
                if checks[c](a, j, q):
                    ruled += 1
                else:
                    row[j] = c
                    if rec(j + 1):
                        a[j] &= ~bit_v
                        a[q] &= ~bit_j
                        return True
                a[j] &= ~bit_v
                a[q] &= ~bit_j
            return False

        rec(0)
        return (raw if first_only else found), nodes, ruled


_worker: Optional[_Extender] = None


def _init_worker(t: TargetSpec) -> None:
    global _worker
    _worker = _Extender(t)


def _extend_job(args):
    tri, q, limit, first_only = args
    try:
        return _worker.extend(tri, q, limit, first_only)
    except _OutOfBudget:
        return None


class LevelSearch:
    """Level-by-level enumeration of target-free colorings up to isomorphism."""

    def __init__(self, t: TargetSpec, budget: Budget = Budget(), threads: int = 1) -> None:
        self.t = t
        self.budget = budget
        self.threads = max(1, threads)
        self.stats = SearchStats()
        self.level: list[bytes] = [b""]
        self.q = 1
        self.stats.level_sizes[1] = 1
        self._ext = _Extender(t)
        self._pool = None
        self._t0 = time.perf_counter()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.terminate()
            self._pool = None

    def __enter__(self) -> LevelSearch:
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    def _limit(self) -> float:
        if self.budget.seconds is not None and time.perf_counter() - self._t0 > self.budget.seconds:
            raise _OutOfBudget
        if self.budget.nodes is None:
            return float("inf")
        left = self.budget.nodes - self.stats.nodes
        if left <= 0:
            raise _OutOfBudget
        return left

    def _results(self, first_only: bool):
        """Yield extension results for the current level in order."""
        q = self.q
        if self.threads == 1 or len(self.level) < 2:
            for tri in self.level:
                yield self._ext.extend(tri, q, self._limit(), first_only)
            return
        if self._pool is None:
            ctx = multiprocessing.get_context("fork")
            self._pool = ctx.Pool(self.threads, initializer=_init_worker, initargs=(self.t,))
        limit = self._limit()
        jobs = ((tri, q, limit, first_only) for tri in self.level)
        for res in self._pool.imap(_extend_job, jobs, chunksize=4):
            if res is None:
                raise _OutOfBudget
            yield res
            self._limit()

    def _account(self, nodes: int, ruled: int) -> None:
        self.stats.nodes += nodes
        self.stats.ruled_out += ruled
        self.stats.seconds = time.perf_counter() - self._t0

    def advance(self) -> None:
        """Replace the level for K_q by the full level for K_{q+1}."""
        merged: dict[bytes, bytes] = {}
        for found, nodes, ruled in self._results(first_only=False):
            self._account(nodes, ruled)
            for key, rep in found.items():
                merged.setdefault(key, rep)
        self.q += 1
        self.level = [merged[k] for k in sorted(merged)]
        self.stats.level_sizes[self.q] = len(self.level)

    def first_extension(self) -> Optional[bytes]:
        """Some target-free coloring of K_{q+1}, scanning the level in order."""
        for raw, nodes, ruled in self._results(first_only=True):
            self._account(nodes, ruled)
            if raw:
                self.close()
                return raw[0]
        return None

    def coloring(self, tri: bytes, p: int) -> Coloring:
        return Coloring(p, len(self.t), tri)


def _checked(c: Coloring, t: TargetSpec) -> Coloring:
    w = verify_coloring(c, t)
    if w is not None:
        raise AssertionError(f"search produced a coloring containing {t[w.class_index]}")
    return c


def is_forced(p: int, t: TargetSpec, budget: Budget = Budget(), threads: int = 1) -> Decision:
    """Decide whether every coloring of K_p contains a class-i copy of target i."""
    if p < 1:
        raise ValueError("p must be at least 1")
    with LevelSearch(t, budget, threads) as s:
        try:
            if p == 1:
                s.stats.seconds = time.perf_counter() - s._t0
                return Decision(AVOIDABLE, Coloring.monochrome(1, len(t)), s.stats)
            while s.q < p - 1:
                s.advance()
                if not s.level:
                    return Decision(FORCED, None, s.stats)
            found = s.first_extension()
        except _OutOfBudget:
            return Decision(BUDGET_EXHAUSTED, None, s.stats)
        if found is None:
            s.stats.level_sizes[p] = 0
            return Decision(FORCED, None, s.stats)
        return Decision(AVOIDABLE, _checked(s.coloring(found, p), t), s.stats)


def construction_start(t: TargetSpec) -> int:
    """Lower bound known without search: the blow-up bound when it applies,
    otherwise the largest target order."""
    cliques = [x.k for x in t if isinstance(x, Clique)]
    others = [x for x in t if not isinstance(x, Clique)]
    trivial = max(x.order for x in t)
    kappa = known_kappa(cliques) if cliques else None
    if kappa is None:
        return trivial
    if not others:
        return kappa
    if len(others) == 1 and t[0] is others[0]:
        return max(trivial, ramsey_lower_bound(RamseyParams(others[0].order, kappa)))
    return trivial


def search_ramsey(t: TargetSpec, p_max: int, budget: Budget = Budget(),
                  threads: int = 1) -> SearchOutcome:
    """Smallest p <= p_max at which every coloring of K_p is forced, if reached."""
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    start = construction_start(t)
    with LevelSearch(t, budget, threads) as s:
        try:
            while s.q < p_max:
                prev = s.level
                s.advance()
                if not s.level:
                    value = s.q
                    witness = _checked(Coloring(value - 1, len(t), prev[0]), t)
                    if value < start:
                        raise AssertionError(f"search found R = {value} below construction bound {start}")
                    return SearchOutcome(EXACT, t, value=value, witness=witness, start=start,
                                         stats=s.stats)
        except _OutOfBudget:
            return SearchOutcome(EXHAUSTED, t, best_lower=s.q + 1, best_upper_tried=s.q + 1,
                                 start=start, stats=s.stats)
        witness = _checked(Coloring(s.q, len(t), s.level[0]), t)
        return SearchOutcome(LOWER_BOUND_ONLY, t, bound=p_max + 1, witness=witness, start=start,
                             stats=s.stats)

