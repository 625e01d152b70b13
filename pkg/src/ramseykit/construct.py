"""Blow-up constructions of target-avoiding colorings and the value formulas.

The blow-up replaces every vertex of an *outer* coloring by a copy of an
*inner* coloring.  Edges inside a copy keep their inner class; edges between
copies inherit the outer class of the pair of copies they join.  When the
inner coloring avoids connected targets and the outer coloring avoids
cliques, the blow-up avoids all of them, which certifies

    R(inner targets, outer cliques) >= (gamma - 1)(kappa - 1) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .coloring import Coloring
from .detect import Witness, verify_coloring
from .targets import Clique, TargetSpec


class ConstructError(ValueError):
    pass


class InvalidIngredient(ConstructError):
    def __init__(self, role: str, witness: Witness, target) -> None:
        super().__init__(
            f"{role} coloring contains {target} in class {witness.class_index}: "
            f"vertices {' '.join(map(str, witness.vertices))}")
        self.role = role
        self.witness = witness


class KnownValuesError(ValueError):
    pass


@dataclass(frozen=True)
class RamseyParams:
    gamma: int
    kappa: int

    def __post_init__(self) -> None:
        if self.gamma < 2 or self.kappa < 2:
            raise ConstructError(f"gamma and kappa must both be >= 2, got {self.gamma}, {self.kappa}")


def ramsey_lower_bound(params: RamseyParams) -> int:
    return (params.gamma - 1) * (params.kappa - 1) + 1


def cycle_ramsey(n: int) -> int:
    """R(C_n) for a single class: every coloring of K_n is monochromatic."""
    if n < 3:
        raise ConstructError("cycle length must be at least 3")
    return n


def blow_up(outer: Coloring, inner: Coloring) -> Coloring:
    """Replace each outer vertex by a copy of ``inner``.

    Vertex ``(b, j)`` (block ``b``, offset ``j``) becomes ``b * inner.p + j``.
    Outer classes keep indices ``0..outer.r-1``; inner classes are shifted up
    by ``outer.r``.
    """
    if outer.p < 1 or inner.p < 1:
        raise ConstructError("blow-up ingredients need at least one vertex")
    pi, shift = inner.p, outer.r
    ocol, icol = outer.color, inner.color

    def cls(u: int, v: int) -> int:
        bu, ju = divmod(u, pi)
        bv, jv = divmod(v, pi)
        if bu == bv:
            return shift + icol(ju, jv)
        return ocol(bu, bv)

    return Coloring.from_function(outer.p * pi, outer.r + inner.r, cls)


def pentagon_coloring() -> Coloring:
    """K_5 split into two 5-cycles: class 0 joins i, i+1 and class 1 joins i, i+2."""
    return Coloring.from_function(5, 2, lambda u, v: 0 if (v - u) % 5 in (1, 4) else 1)


def lower_bound_witness(inner: Coloring, outer: Coloring, t: TargetSpec) -> Coloring:
    """Blow-up whose classes line up with ``t``.

    ``t`` lists the inner targets first (one per inner class, each connected)
    followed by one clique per outer class.  The result has inner classes at
    ``0..inner.r-1`` and outer classes after them, and is checked against
    ``t`` before it is returned.
    """
    ri, ro = inner.r, outer.r
    if len(t) != ri + ro:
        raise ConstructError(f"{len(t)} targets for {ri} inner + {ro} outer classes")
    inner_t = TargetSpec(t.targets[:ri])
    outer_t = TargetSpec(t.targets[ri:])
    for target in outer_t:
        if not isinstance(target, Clique):
            raise ConstructError(f"outer targets must be cliques, got {target}")
    w = verify_coloring(inner, inner_t)
    if w is not None:
        raise InvalidIngredient("inner", w, inner_t[w.class_index])
    w = verify_coloring(outer, outer_t)
    if w is not None:
        raise InvalidIngredient("outer", w, outer_t[w.class_index])
    mapping = [ri + j for j in range(ro)] + list(range(ri))
    result = blow_up(outer, inner).relabel_classes(mapping)
    w = verify_coloring(result, t)
    if w is not None:
        raise AssertionError(f"blow-up contains {t[w.class_index]}: {w}")
    return result


# -- known clique Ramsey values -----------------------------------------------


@dataclass(frozen=True)
class KnownValue:
    sizes: tuple[int, ...]
    value: int
    citation: str


def parse_known_values(text: str) -> dict[tuple[int, ...], KnownValue]:
    table: dict[tuple[int, ...], KnownValue] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise KnownValuesError(f"line {lineno}: expected '<sizes> <value> <citation>'")
        try:
            sizes = tuple(int(x) for x in parts[0].split(","))
            value = int(parts[1])
        except ValueError:
            raise KnownValuesError(f"line {lineno}: non-integer size or value") from None
        if list(sizes) != sorted(sizes) or min(sizes) < 2 or value < 2:
            raise KnownValuesError(f"line {lineno}: sizes must be sorted and >= 2")
        if sizes in table:
            raise KnownValuesError(f"line {lineno}: duplicate entry {parts[0]}")
        table[sizes] = KnownValue(sizes, value, parts[2])
    return table


KNOWN_VALUES = parse_known_values(
    resources.files(__package__).joinpath("data/known_kappa.txt").read_text(encoding="utf-8"))


def known_kappa(cliques: Sequence[int]) -> Optional[int]:
    """R(K_a, K_b, ...) from definitions or the shipped literature table.

    A K_2 target is met by any single edge of its class, so it never changes
    the value and is dropped before lookup.
    """
    sizes = sorted(cliques)
    if not sizes or sizes[0] < 2:
        raise ConstructError(f"clique sizes must be >= 2, got {list(cliques)}")
    rest = [k for k in sizes if k > 2]
    if not rest:
        return 2
    if len(rest) == 1:
        return rest[0]
    entry = KNOWN_VALUES.get(tuple(rest))
    return None if entry is None else entry.value


# -- exact-value prediction ---------------------------------------------------


@dataclass(frozen=True)
class Prediction:
    value: Optional[int]
    tag: Optional[str]
    reason: str
    kappa: Optional[int] = None

    def __str__(self) -> str:
        if self.value is not None:
            return f"{self.value} ({self.tag})"
        return f"out of proven range ({self.reason})"


LONG_CYCLE = "Cor3"
SMALL_KAPPA = "Cor4"


def predicted_value(n: int, cliques: Sequence[int]) -> Prediction:
    """Exact R(C_n, K_a, K_b, ...) where a proven formula applies.

    The value is (n - 1)(kappa - 1) + 1.  It is tagged ``Cor3`` when
    n >= 4 kappa + 2 and ``Cor4`` when kappa is 3..7 and n >= kappa.  The
    pair n = 3 with a single K_3 is the classical exception and gets no value.
    """
    if n < 3 or not cliques or any(k < 3 for k in cliques):
        raise ConstructError("need n >= 3 and clique sizes >= 3")
    kappa = known_kappa(cliques)
    if kappa is None:
        return Prediction(None, None, "unknown kappa")
    value = ramsey_lower_bound(RamseyParams(cycle_ramsey(n), kappa))
    if n >= 4 * kappa + 2:
        return Prediction(value, LONG_CYCLE, "n >= 4*kappa+2", kappa)
    if list(cliques) == [3] and n == 3:
        return Prediction(None, None, "n=l=3 exception", kappa)
    if 3 <= kappa <= 7 and n >= kappa:
        return Prediction(value, SMALL_KAPPA, "kappa in 3..7", kappa)
    return Prediction(None, None, "n below range for kappa", kappa)


def builtin_outer(cliques: Sequence[int]) -> Optional[Coloring]:
    """Built-in clique-avoiding outer coloring on kappa - 1 vertices, if one ships.

    A single clique K_k uses monochrome K_{k-1}; two triangles use the
    pentagon coloring.
    """
    sizes = list(cliques)
    if len(sizes) == 1:
        return Coloring.monochrome(sizes[0] - 1)
    if sorted(sizes) == [3, 3]:
        return pentagon_coloring()
    return None
