from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from logging import getLogger

import networkx as nx
from frozendict import frozendict

from .graph import Graph, GraphError, VertexOutOfRangeError, build, disjoint_union, from_networkx
from .operators import cartesian, cartesian_n, join

_log = getLogger(__name__)


class BadArityError(GraphError):
    pass


class BadParamError(GraphError):
    pass


class Family(Enum):
    path = "path"
    cycle = "cycle"
    complete = "complete"
    complete_bipartite = "complete_bipartite"
    empty = "empty"
    star = "star"
    wheel = "wheel"
    fan = "fan"
    hypercube = "hypercube"
    hamming = "hamming"
    grid = "grid"
    ladder = "ladder"
    friendship = "friendship"
    cone = "cone"
    bridge_path = "bridge_path"
    bridge_cycle = "bridge_cycle"


# (arity, or None for "one or more"), and the minimum value of each parameter
_SIGNATURES: frozendict[Family, tuple[int | None, tuple[int, ...]]] = frozendict({
    Family.path: (1, (1,)),
    Family.cycle: (1, (3,)),
    Family.complete: (1, (1,)),
    Family.complete_bipartite: (2, (1, 1)),
    Family.empty: (1, (1,)),
    Family.star: (1, (1,)),
    Family.wheel: (1, (3,)),
    Family.fan: (1, (1,)),
    Family.hypercube: (1, (1,)),
    Family.hamming: (None, (2,)),
    Family.grid: (2, (1, 1)),
    Family.ladder: (1, (1,)),
    Family.friendship: (1, (1,)),
    Family.cone: (2, (3, 1)),
    Family.bridge_path: (1, (1,)),
    Family.bridge_cycle: (2, (1, 3)),
})

_NAME_PATTERN = re.compile(r"^\s*([a-z_]+)\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$")


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.family.value}({','.join(map(str, self.params))})"

    def validate(self):
        arity, minimums = _SIGNATURES[self.family]
        if arity is None:
            if not self.params:
                raise BadArityError(f"{self.family.value} takes one or more parameters")
            minimums = minimums * len(self.params)
        elif len(self.params) != arity:
            raise BadArityError(f"{self.family.value} takes {arity} parameter(s), got {len(self.params)}")
        for value, minimum in zip(self.params, minimums):
            if value < minimum:
                raise BadParamError(f"{self.name}: every parameter must be at least {minimum}")

    def __str__(self) -> str:
        return self.name


def parse_spec(name: str) -> FamilySpec:
    """Inverse of `FamilySpec.name`, e.g. "complete_bipartite(2,3)"."""
    match = _NAME_PATTERN.match(name)
    if not match:
        raise BadParamError(f"not a family name: {name!r}")
    try:
        family = Family(match.group(1))
    except ValueError as err:
        raise BadParamError(f"unknown family: {match.group(1)!r}") from err
    return FamilySpec(family, tuple(int(p) for p in match.group(2).split(",")))


def path_graph(s: int) -> Graph:
    return from_networkx(nx.path_graph(s))


def cycle_graph(s: int) -> Graph:
    return from_networkx(nx.cycle_graph(s))


def complete_graph(s: int) -> Graph:
    return from_networkx(nx.complete_graph(s))


def empty_graph(s: int) -> Graph:
    return from_networkx(nx.empty_graph(s))


def complete_bipartite_graph(r: int, s: int) -> Graph:
    """Sides at 0..r-1 and r..r+s-1."""
    return from_networkx(nx.complete_bipartite_graph(r, s))


def _bits_value(node: int | tuple[int, ...]) -> int:
    if isinstance(node, int):
        return node
    return reduce(lambda acc, bit: 2 * acc + bit, node, 0)


def hypercube_graph(k: int) -> Graph:
    """Q_k with vertex ids read as k-bit words; ids are adjacent when they differ in one bit."""
    return from_networkx(nx.hypercube_graph(k), _bits_value)


def copies(g: Graph, k: int) -> Graph:
    return reduce(disjoint_union, [g] * k)


def bridge_graph(parts: Sequence[Graph], anchors: Sequence[int]) -> Graph:
    if not parts or len(parts) != len(anchors):
        raise BadArityError(f"bridge graphs need one anchor per part, got {len(parts)} parts and {len(anchors)} anchors")
    offsets = [0]
    for part, anchor in zip(parts, anchors):
        if not 0 <= anchor < part.order:
            raise VertexOutOfRangeError(f"anchor {anchor} is not a vertex of a part with order {part.order}")
        offsets.append(offsets[-1] + part.order)
    union = reduce(disjoint_union, parts)
    links = [(offsets[i] + anchors[i], offsets[i + 1] + anchors[i + 1]) for i in range(len(parts) - 1)]
    return build(union.order, union.edges + tuple(links))


def generate(spec: FamilySpec) -> Graph:
    _log.debug(f"generate: {spec}")
    spec.validate()
    p = spec.params
    match spec.family:
        case Family.path:
            return path_graph(p[0])
        case Family.cycle:
            return cycle_graph(p[0])
        case Family.complete:
            return complete_graph(p[0])
        case Family.complete_bipartite:
            return complete_bipartite_graph(p[0], p[1])
        case Family.empty:
            return empty_graph(p[0])
        case Family.star:
            return complete_bipartite_graph(1, p[0])
        case Family.wheel:
            return join(complete_graph(1), cycle_graph(p[0]))
        case Family.fan:
            return join(complete_graph(1), path_graph(p[0]))
        case Family.hypercube:
            return hypercube_graph(p[0])
        case Family.hamming:
            return cartesian_n([complete_graph(s) for s in p])
        case Family.grid:
            return cartesian(path_graph(p[0]), path_graph(p[1]))
        case Family.ladder:
            return cartesian(path_graph(2), path_graph(p[0] + 1))
        case Family.friendship:
            return join(complete_graph(1), copies(complete_graph(2), p[0]))
        case Family.cone:
            return join(cycle_graph(p[0]), empty_graph(p[1]))
        case Family.bridge_path:
            # anchored at the centre of each P3
            return bridge_graph([path_graph(3)] * p[0], [1] * p[0])
        case Family.bridge_cycle:
            return bridge_graph([cycle_graph(p[1])] * p[0], [0] * p[0])
    raise BadParamError(f"unsupported family: {spec.family}")


def family_order(spec: FamilySpec) -> int:
    """Order of `generate(spec)` without building it."""
    spec.validate()
    p = spec.params
    match spec.family:
        case Family.complete_bipartite:
            return p[0] + p[1]
        case Family.grid:
            return p[0] * p[1]
        case Family.star | Family.wheel | Family.fan:
            return p[0] + 1
        case Family.hypercube:
            return 2 ** p[0]
        case Family.hamming:
            return reduce(lambda acc, s: acc * s, p, 1)
        case Family.ladder:
            return 2 * (p[0] + 1)
        case Family.friendship:
            return 2 * p[0] + 1
        case Family.cone:
            return p[0] + p[1]
        case Family.bridge_path:
            return 3 * p[0]
        case Family.bridge_cycle:
            return p[0] * p[1]
    return p[0]
