from __future__ import annotations

from dataclasses import dataclass
from logging import getLogger

import numpy as np

from .graph import DEFAULT_BLOCK_SIZE, DisconnectedError, DistanceMatrix, Edge, Graph, all_pairs_distances, \
    is_connected, iter_distance_blocks

_log = getLogger(__name__)


@dataclass(frozen=True)
class EdgeContribution:
    edge: Edge
    n_u: int
    n_v: int

    @property
    def contribution(self) -> int:
        return abs(self.n_u - self.n_v)

    def serialize(self) -> dict:
        return {
            "u": self.edge[0],
            "v": self.edge[1],
            "n_u": self.n_u,
            "n_v": self.n_v,
            "contribution": self.contribution,
        }

    def __str__(self) -> str:
        return f"{self.edge[0]} {self.edge[1]} {self.n_u} {self.n_v} {self.contribution}"


def _closer_counts(rows: np.ndarray, ends: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    to_u = rows[:, ends[:, 0]]
    to_v = rows[:, ends[:, 1]]
    return (to_u < to_v).sum(axis=0, dtype=np.int64), (to_v < to_u).sum(axis=0, dtype=np.int64)


def edge_contributions(g: Graph, d: DistanceMatrix) -> list[EdgeContribution]:
    """n_u counts every vertex strictly closer to u than to v, u itself included."""
    _log.debug(f"edge contributions: {g}")
    if not g.edges:
        return []
    # d is symmetric, so row w holds the distances from w to both endpoints
    n_u, n_v = _closer_counts(d.dist, np.asarray(g.edges, dtype=np.int64))
    return [EdgeContribution(edge, int(a), int(b)) for edge, a, b in zip(g.edges, n_u, n_v)]


def edge_contributions_of(g: Graph) -> list[EdgeContribution]:
    return edge_contributions(g, all_pairs_distances(g))


def mostar(g: Graph, block_size: int = DEFAULT_BLOCK_SIZE) -> int:
    _log.debug(f"mostar: {g}")
    if not is_connected(g):
        raise DisconnectedError(f"the Mostar index is undefined on a disconnected {g}")
    if not g.edges:
        return 0
    ends = np.asarray(g.edges, dtype=np.int64)
    n_u = np.zeros(len(ends), dtype=np.int64)
    n_v = np.zeros(len(ends), dtype=np.int64)
    for rows in iter_distance_blocks(g, block_size):
        block_u, block_v = _closer_counts(rows, ends)
        n_u += block_u
        n_v += block_v
    return int(np.abs(n_u - n_v).sum())


def albertson_irregularity(g: Graph) -> int:
    if not g.edges:
        return 0
    ends = np.asarray(g.edges, dtype=np.int64)
    return int(np.abs(g.degrees[ends[:, 0]] - g.degrees[ends[:, 1]]).sum())


def total_irregularity(g: Graph) -> int:
    # with degrees ascending, d_(i) is subtracted by the i smaller ones and subtracts the s-1-i larger ones
    ordered = np.sort(g.degrees)
    weights = 2 * np.arange(g.order, dtype=np.int64) - g.order + 1
    return int((ordered * weights).sum())
