"""Graph operations with fixed vertex-id layouts.

Every constructor returns a fresh `Graph`. The id layout of each result is
described by `layout(op, *factors)` and in PRODUCT_LAYOUTS.md. Corona,
Cartesian, lexicographic and join are built by networkx and relabelled onto
those layouts; the operations networkx has no product for are assembled here.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from logging import getLogger

import networkx as nx

from .graph import Edge, Graph, GraphError, build, from_networkx, to_networkx

_log = getLogger(__name__)


class Operation(Enum):
    corona = "corona"
    cartesian = "cartesian"
    join = "join"
    lexicographic = "lexicographic"
    indu_bala = "indu-bala"
    subdivision = "subdivision"
    sve_join = "sve"
    thorn = "thorn"


@dataclass(frozen=True)
class LayoutBlock:
    label: str
    start: int
    size: int

    @property
    def stop(self) -> int:
        return self.start + self.size


@dataclass(frozen=True)
class ProductLayout:
    op: Operation
    blocks: tuple[LayoutBlock, ...]

    @property
    def order(self) -> int:
        return sum(block.size for block in self.blocks)

    def block(self, label: str) -> LayoutBlock:
        for block in self.blocks:
            if block.label == label:
                return block
        raise KeyError(label)


def _shifted(edges: Sequence[Edge], shift: int) -> list[Edge]:
    return [(u + shift, v + shift) for u, v in edges]


def corona(g: Graph, h: Graph) -> Graph:
    _log.debug(f"corona: {g} with {h}")
    s1, s2 = g.order, h.order
    # networkx names the copy of h-vertex v hanging off g-vertex i as (i, v)
    return from_networkx(nx.corona_product(to_networkx(g), to_networkx(h)),
                         lambda x: s1 + x[0] * s2 + x[1] if isinstance(x, tuple) else x)


def thorn(g: Graph, m: int) -> Graph:
    if m < 1:
        raise GraphError(f"thorn graphs need at least one pendant per vertex, got {m}")
    return corona(g, build(m, []))


def _row_major(s2: int):
    return lambda pair: pair[0] * s2 + pair[1]


def cartesian(g: Graph, h: Graph) -> Graph:
    _log.debug(f"cartesian: {g} with {h}")
    return from_networkx(nx.cartesian_product(to_networkx(g), to_networkx(h)), _row_major(h.order))


def cartesian_n(factors: Sequence[Graph]) -> Graph:
    if not factors:
        raise GraphError("a cartesian product needs at least one factor")
    return reduce(cartesian, factors)


def cartesian_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise GraphError(f"cartesian powers start at 1, got {k}")
    return cartesian_n([g] * k)


def join(g: Graph, h: Graph) -> Graph:
    _log.debug(f"join: {g} with {h}")
    s1 = g.order
    shifted = nx.relabel_nodes(to_networkx(h), lambda v: v + s1)
    return from_networkx(nx.full_join(to_networkx(g), shifted), lambda v: v)


def lexicographic(g: Graph, h: Graph) -> Graph:
    _log.debug(f"lexicographic: {g} with {h}")
    return from_networkx(nx.lexicographic_product(to_networkx(g), to_networkx(h)), _row_major(h.order))


def indu_bala(g: Graph, h: Graph) -> Graph:
    _log.debug(f"indu-bala: {g} with {h}")
    s1, s2 = g.order, h.order
    half = join(g, h)
    shift = s1 + s2
    edges = list(half.edges) + _shifted(half.edges, shift)
    # copy-1 h-vertex j is matched with copy-2 h-vertex j
    edges += [(s1 + j, shift + s1 + j) for j in range(s2)]
    return build(2 * shift, edges)


def subdivision(g: Graph) -> Graph:
    _log.debug(f"subdivision: {g}")
    s1 = g.order
    edges: list[Edge] = []
    for index, (u, v) in enumerate(g.edges):
        w = s1 + index
        edges += [(u, w), (w, v)]
    return build(s1 + g.size, edges)


def sve_join(g1: Graph, g2: Graph | None = None, g3: Graph | None = None) -> Graph:
    """Subdivision vertex-edge join. An absent g2 or g3 plays the null graph."""
    _log.debug(f"subdivision vertex-edge join: {g1} with {g2} and {g3}")
    s1, t1 = g1.order, g1.size
    base = subdivision(g1)
    order = base.order
    edges = list(base.edges)
    if g2 is not None:
        edges += _shifted(g2.edges, order)
        edges += [(p, order + a) for p in range(s1) for a in range(g2.order)]
        order += g2.order
    if g3 is not None:
        edges += _shifted(g3.edges, order)
        edges += [(s1 + i, order + b) for i in range(t1) for b in range(g3.order)]
        order += g3.order
    return build(order, edges)


def layout(op: Operation, *factors: Graph | int | None) -> ProductLayout:
    """Block decomposition of the result ids of `op` applied to `factors`.

    The factors are the arguments of the matching constructor, so a thorn layout takes the pendant count `m`.
    """
    blocks: list[LayoutBlock] = []

    def add(label: str, size: int):
        start = blocks[-1].stop if blocks else 0
        blocks.append(LayoutBlock(label, start, size))

    match op:
        case Operation.corona:
            g, h = factors
            add("G", g.order)
            for i in range(g.order):
                add(f"H{i}", h.order)
        case Operation.thorn:
            g, m = factors
            if m < 1:
                raise GraphError(f"thorn graphs need at least one pendant per vertex, got {m}")
            add("G", g.order)
            for i in range(g.order):
                add(f"H{i}", m)
        case Operation.cartesian | Operation.lexicographic:
            g, h = factors
            for a in range(g.order):
                add(f"{a}xH", h.order)
        case Operation.join:
            g, h = factors
            add("G", g.order)
            add("H", h.order)
        case Operation.indu_bala:
            g, h = factors
            for copy in (1, 2):
                add(f"G{copy}", g.order)
                add(f"H{copy}", h.order)
        case Operation.subdivision:
            (g,) = factors
            add("primary", g.order)
            add("inserted", g.size)
        case Operation.sve_join:
            g1, g2, g3 = (list(factors) + [None, None])[:3]
            add("primary", g1.order)
            add("inserted", g1.size)
            if g2 is not None:
                add("G2", g2.order)
            if g3 is not None:
                add("G3", g3.order)
    return ProductLayout(op, tuple(blocks))
