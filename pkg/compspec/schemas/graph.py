"""Pydantic models for graphs and minimum vertex cuts.

Vertices are the indices ``0..n-1``; vertex sets are bitmasks. A graph
stores one neighbor bitmask per vertex.
"""

from collections.abc import Iterable
from functools import lru_cache

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

MAX_VERTICES = 64


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """
    Vertex pairs in graph6 order: column by column over the upper triangle.

    Edge ``k`` of an edge mask is ``edge_pairs(n)[k]``:
    (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    """
    return tuple((i, j) for j in range(1, n) for i in range(j))


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted vertex indices of a bitmask."""
    out: list[int] = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph(BaseModel):
    """Simple undirected graph as symmetric neighbor bitmasks with zero diagonal."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, le=MAX_VERTICES, description="Vertex count")
    adj: tuple[int, ...] = Field(..., description="Neighbor bitmask per vertex")

    @model_validator(mode="after")
    def validate_adjacency(self) -> "Graph":
        """Reject loops, out-of-range neighbors and asymmetric adjacency."""
        if len(self.adj) != self.n:
            raise ValueError(f"adj has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"vertex {i} has a neighbor outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"vertex {i} has a loop")
            for j in vertices_of(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"edge ({i},{j}) is not symmetric")
        return self

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Build without validation; for adjacency produced by this package."""
        return cls.model_construct(n=n, adj=adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, adj=tuple(rows))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Inverse of :meth:`edge_mask`."""
        rows = [0] * n
        for k, (i, j) in enumerate(edge_pairs(n)):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        return cls.trusted(n, tuple(rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph; nodes are relabeled ``0..n-1`` in node order."""
        index = {node: i for i, node in enumerate(graph.nodes)}
        return cls.from_edges(
            graph.number_of_nodes(), ((index[u], index[v]) for u, v in graph.edges)
        )

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_of(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in edge_pairs(self.n) if self.adj[i] >> j & 1]

    def edge_mask(self) -> int:
        """Edge set as an integer; bit ``k`` is the pair ``edge_pairs(n)[k]``."""
        mask = 0
        for k, (i, j) in enumerate(edge_pairs(self.n)):
            if self.adj[i] >> j & 1:
                mask |= 1 << k
        return mask

    def is_regular(self) -> bool:
        return len({row.bit_count() for row in self.adj}) <= 1

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph.trusted(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.trusted(self.n, tuple(rows))

    def relabel(self, order: Iterable[int]) -> "Graph":
        """Graph whose vertex ``a`` is this graph's vertex ``order[a]``."""
        order = tuple(order)
        if sorted(order) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of 0..n-1")
        position = {old: new for new, old in enumerate(order)}
        rows = tuple(
            mask_of(position[w] for w in vertices_of(self.adj[old])) for old in order
        )
        return Graph.trusted(self.n, rows)


class CutProfile(BaseModel):
    """A minimum vertex cut with the component split used by the diameter-3 bound."""

    n: int = Field(..., ge=2)
    cut: tuple[int, ...] = Field(..., description="Vertices of the cut, sorted")
    components: tuple[tuple[int, ...], ...] = Field(
        ..., description="Components of G minus the cut, ordered by bitmask"
    )
    small: tuple[int, ...] = Field(..., description="Vertices of G_s")
    large: tuple[int, ...] = Field(..., description="Vertices of G_t")
    v: int | None = Field(
        default=None, description="Vertex of G_t with no neighbor in the cut"
    )

    @property
    def kappa(self) -> int:
        return len(self.cut)

    @property
    def s(self) -> int:
        return len(self.small)

    @property
    def t(self) -> int:
        return len(self.large)

    @model_validator(mode="after")
    def validate_sizes(self) -> "CutProfile":
        """s + t + |cut| = n, and v lies in G_t."""
        if self.s + self.t + self.kappa != self.n:
            raise ValueError("s + t + |cut| must equal n")
        if self.v is not None and self.v not in self.large:
            raise ValueError("the special vertex must belong to G_t")
        return self
