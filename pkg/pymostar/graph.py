from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from logging import getLogger

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order

_log = getLogger(__name__)

DISTANCE_DTYPE = np.int32
DEFAULT_BLOCK_SIZE = 256


class GraphError(Exception):
    pass


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRangeError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @cached_property
    def degrees(self) -> np.ndarray:
        degrees = np.fromiter((len(nbrs) for nbrs in self.adjacency), dtype=np.int64, count=self.order)
        degrees.setflags(write=False)
        return degrees

    @cached_property
    def regularity(self) -> int | None:
        """The common degree if every vertex has it, else None."""
        first = int(self.degrees[0])
        return first if bool(np.all(self.degrees == first)) else None

    @cached_property
    def csr(self) -> csr_matrix:
        if not self.edges:
            return csr_matrix((self.order, self.order), dtype=np.float64)
        ends = np.asarray(self.edges, dtype=np.int64)
        rows = np.concatenate((ends[:, 0], ends[:, 1]))
        cols = np.concatenate((ends[:, 1], ends[:, 0]))
        data = np.ones(rows.shape[0], dtype=np.float64)
        return csr_matrix((data, (rows, cols)), shape=(self.order, self.order))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __str__(self) -> str:
        return f"graph (order {self.order}, size {self.size})"


def build(order: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    if order < 1:
        raise EmptyGraphError(f"graphs need at least one vertex, got order {order}")
    canonical: set[Edge] = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise SelfLoopError(u)
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) leaves the vertex range 0..{order - 1}")
        canonical.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(canonical))
    neighbors: list[list[int]] = [[] for _ in range(order)]
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
    return Graph(order, edges, adjacency)


def is_connected(g: Graph) -> bool:
    if g.order == 1:
        return True
    reached = breadth_first_order(g.csr, 0, directed=False, return_predecessors=False)
    return len(reached) == g.order


@dataclass(frozen=True)
class DistanceMatrix:
    order: int
    dist: np.ndarray = field(repr=False, compare=False)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.dist[pair])

    @property
    def diameter(self) -> int:
        return int(self.dist.max())


def distance_rows(g: Graph, sources: Sequence[int] | np.ndarray) -> np.ndarray:
    """Hop counts from each of `sources` to every vertex, one row per source.

    Each row is a BFS tree from `breadth_first_order`. Depths come from pointer jumping over the predecessor
    arrays of the whole block: after round r every vertex points 2^r tree levels up, and the loop stops once
    every pointer reaches its root.
    """
    sources = np.asarray(sources, dtype=np.int64)
    roots = sources[:, None]
    parent = np.empty((len(sources), g.order), dtype=np.int64)
    for row, source in enumerate(sources):
        # the adjacency is symmetric, so the directed sweep sees every edge
        _, parent[row] = breadth_first_order(g.csr, source, directed=True, return_predecessors=True)
    reached = parent >= 0
    missing = np.argwhere(~reached & (np.arange(g.order)[None, :] != roots))
    if len(missing):
        raise DisconnectedError(f"vertex {int(sources[missing[0][0]])} does not reach every vertex")
    depth = reached.astype(DISTANCE_DTYPE)
    hop = np.where(reached, parent, roots)
    while not np.all(hop == roots):
        depth = depth + np.take_along_axis(depth, hop, axis=1)
        hop = np.take_along_axis(hop, hop, axis=1)
    return depth


def iter_distance_blocks(g: Graph, block_size: int = DEFAULT_BLOCK_SIZE) -> Iterator[np.ndarray]:
    for start in range(0, g.order, block_size):
        yield distance_rows(g, np.arange(start, min(start + block_size, g.order)))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    _log.debug(f"all pairs distances: {g}")
    dist = distance_rows(g, np.arange(g.order))
    dist.setflags(write=False)
    return DistanceMatrix(g.order, dist)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.order
    return build(a.order + b.order, a.edges + tuple((u + shift, v + shift) for u, v in b.edges))


def common_neighbors(g: Graph, u: int, v: int) -> int:
    if u == v:
        raise GraphError(f"common neighbors need two distinct vertices, got {u} twice")
    return len(set(g.adjacency[u]).intersection(g.adjacency[v]))


def relabel(g: Graph, permutation: Sequence[int]) -> Graph:
    if sorted(permutation) != list(range(g.order)):
        raise VertexOutOfRangeError(f"not a permutation of 0..{g.order - 1}: {list(permutation)}")
    return build(g.order, [(permutation[u], permutation[v]) for u, v in g.edges])


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.order))
    nxg.add_edges_from(g.edges)
    return nxg


def from_networkx(nxg: nx.Graph, index: Callable[[Hashable], int] | None = None) -> Graph:
    """Converts `nxg`, placing node x at vertex id `index(x)`; nodes keep their insertion order by default."""
    if index is None:
        position = {node: i for i, node in enumerate(nxg)}
        index = position.__getitem__
    ids = sorted(index(node) for node in nxg)
    if ids != list(range(len(ids))):
        raise VertexOutOfRangeError(f"node labels do not map onto 0..{nxg.number_of_nodes() - 1}")
    return build(nxg.number_of_nodes(), [(index(x), index(y)) for x, y in nxg.edges])
