"""Forbidden target graphs, one per color class, and their text syntax.

Target text is a comma-separated list of tokens::

    K<k>        clique on k vertices
    C<n>        cycle of length n
    P<m>        path on m vertices
    F:<path>    general connected graph read from an edge-list file
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

from .graph import Graph, GraphError, complete, cycle, is_connected, load_graph, path


class TargetError(ValueError):
    pass


class TargetParseError(TargetError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"position {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Clique:
    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise TargetError(f"clique target needs k >= 2, got {self.k}")

    @property
    def order(self) -> int:
        return self.k

    def graph(self) -> Graph:
        return complete(self.k)

    def __str__(self) -> str:
        return f"K{self.k}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise TargetError(f"cycle target needs n >= 3, got {self.n}")

    @property
    def order(self) -> int:
        return self.n

    def graph(self) -> Graph:
        return cycle(self.n)

    def __str__(self) -> str:
        return f"C{self.n}"


@dataclass(frozen=True)
class Path:
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise TargetError(f"path target needs m >= 2, got {self.m}")

    @property
    def order(self) -> int:
        return self.m

    def graph(self) -> Graph:
        return path(self.m)

    def __str__(self) -> str:
        return f"P{self.m}"


@dataclass(frozen=True)
class General:
    pattern: Graph
    source: str = "graph"

    def __post_init__(self) -> None:
        if self.pattern.p < 1 or not is_connected(self.pattern):
            raise TargetError(f"general target {self.source!r} must be a connected graph")

    @property
    def order(self) -> int:
        return self.pattern.p

    def graph(self) -> Graph:
        return self.pattern

    def __str__(self) -> str:
        return f"F:{self.source}"


Target = Union[Clique, Cycle, Path, General]


@dataclass(frozen=True)
class TargetSpec:
    targets: tuple[Target, ...]

    def __post_init__(self) -> None:
        if not self.targets:
            raise TargetError("a target spec needs at least one target")

    def __len__(self) -> int:
        return len(self.targets)

    def __iter__(self) -> Iterator[Target]:
        return iter(self.targets)

    def __getitem__(self, i: int) -> Target:
        return self.targets[i]

    def __add__(self, other: TargetSpec) -> TargetSpec:
        return TargetSpec(self.targets + other.targets)

    def __str__(self) -> str:
        return ",".join(map(str, self.targets))


def targets(*items: Target) -> TargetSpec:
    return TargetSpec(tuple(items))


_TOKEN = re.compile(r"([KCP])(\d+)$")


def parse_targets(text: str) -> TargetSpec:
    out: list[Target] = []
    pos = 0
    for token in text.split(","):
        if token.startswith("F:"):
            fname = token[2:]
            if not fname:
                raise TargetParseError("empty graph file name", pos)
            try:
                g = load_graph(fname)
            except (OSError, GraphError) as exc:
                raise TargetParseError(f"cannot read graph file {fname!r}: {exc}", pos) from None
            try:
                out.append(General(g, fname))
            except TargetError as exc:
                raise TargetParseError(str(exc), pos) from None
        else:
            m = _TOKEN.match(token)
            if not m:
                raise TargetParseError(f"expected K<int>, C<int>, P<int> or F:<path>, got {token!r}", pos)
            kind, size = m.group(1), int(m.group(2))
            try:
                out.append({"K": Clique, "C": Cycle, "P": Path}[kind](size))
            except TargetError as exc:
                raise TargetParseError(str(exc), pos) from None
        pos += len(token) + 1
    return TargetSpec(tuple(out))
