"""
Exhaustive enumeration of the class of connected n-vertex graphs with connectivity kappa.

Every edge mask in ``[0, 2^(n(n-1)/2))`` is visited in ascending order; bit
``k`` of a mask is the pair ``edge_pairs(n)[k]``. A mask range can be split
into contiguous shards that are scanned independently.
"""

import logging
from collections.abc import Iterable, Iterator
from functools import lru_cache
from itertools import permutations

import numpy as np

from compspec.errors import EnumerationLimitError
from compspec.schemas.graph import Graph, edge_pairs
from compspec.schemas.params import ClassFilter, DiameterRule
from compspec.services.graphcore import (
    connectivity_masks,
    diameter_masks,
    graph6_encode,
    is_connected_masks,
)

logger = logging.getLogger(__name__)

MAX_ENUMERATION_VERTICES = 8

# Default scale; n = 8 needs an explicit allow_large
DEFAULT_ENUMERATION_VERTICES = 7

_CHUNK_BITS = 7
_LANE_BITS = 8


def check_enumeration_size(n: int, *, allow_large: bool = False) -> None:
    """
    Raises:
        EnumerationLimitError: if n > 8, or n = 8 without ``allow_large``
    """
    if n > MAX_ENUMERATION_VERTICES:
        raise EnumerationLimitError(
            f"exhaustive enumeration supports n <= {MAX_ENUMERATION_VERTICES}, got n={n}"
        )
    if n > DEFAULT_ENUMERATION_VERTICES and not allow_large:
        raise EnumerationLimitError(
            f"n={n} scans {1 << (n * (n - 1) // 2)} edge masks; pass allow_large to run it"
        )


def mask_count(n: int) -> int:
    """Number of labeled graphs on n vertices."""
    return 1 << (n * (n - 1) // 2)


@lru_cache(maxsize=None)
def _packed_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """
    Per 7-bit chunk of an edge mask, the neighbor rows it contributes.

    Rows are packed into one integer, 8 bits per vertex, so an adjacency is
    the OR of one table entry per chunk.
    """
    pairs = edge_pairs(n)
    tables = []
    for start in range(0, len(pairs), _CHUNK_BITS):
        chunk = pairs[start:start + _CHUNK_BITS]
        table = []
        for value in range(1 << len(chunk)):
            packed = 0
            for bit, (i, j) in enumerate(chunk):
                if value >> bit & 1:
                    packed |= (1 << j) << (_LANE_BITS * i)
                    packed |= (1 << i) << (_LANE_BITS * j)
            table.append(packed)
        tables.append(tuple(table))
    return tuple(tables)


def adjacency_of_mask(n: int, mask: int) -> tuple[int, ...]:
    """Neighbor rows of the labeled graph with the given edge mask (n <= 8)."""
    packed = 0
    chunk_mask = (1 << _CHUNK_BITS) - 1
    for index, table in enumerate(_packed_tables(n)):
        packed |= table[(mask >> (_CHUNK_BITS * index)) & chunk_mask]
    lane = (1 << _LANE_BITS) - 1
    return tuple((packed >> (_LANE_BITS * v)) & lane for v in range(n))


def shard_ranges(n: int, shards: int) -> list[tuple[int, int]]:
    """Split the full mask range into ``shards`` contiguous ``(lo, hi)`` blocks."""
    total = mask_count(n)
    shards = max(1, min(shards, total))
    step, extra = divmod(total, shards)
    ranges = []
    lo = 0
    for index in range(shards):
        hi = lo + step + (1 if index < extra else 0)
        ranges.append((lo, hi))
        lo = hi
    return ranges


def diameter_matches(adj: tuple[int, ...], n: int, rule: DiameterRule) -> bool:
    """Diameter rule on a connected graph."""
    if rule == "any":
        return True
    d = diameter_masks(adj, n, stop_at=3)
    return d == 2 if rule == "exactly-2" else d >= 3


def iter_class_masks(
    n: int, kappa: int, rule: DiameterRule, lo: int, hi: int
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """
    Yield ``(mask, adj)`` for every mask in ``[lo, hi)`` whose graph is
    connected, has connectivity ``kappa`` and passes the diameter rule.
    """
    full = (1 << n) - 1
    min_edges = max(n - 1, (n * kappa + 1) // 2)
    for mask in range(lo, hi):
        if mask.bit_count() < min_edges:
            continue
        adj = adjacency_of_mask(n, mask)
        if min(row.bit_count() for row in adj) < kappa:
            continue
        if not is_connected_masks(adj, full):
            continue
        if connectivity_masks(adj, n, cap=kappa + 1) != kappa:
            continue
        if not diameter_matches(adj, n, rule):
            continue
        yield mask, adj


def enumerate_class(
    class_filter: ClassFilter,
    *,
    allow_large: bool = False,
    mask_range: tuple[int, int] | None = None,
) -> Iterator[Graph]:
    """
    Every labeled graph on ``n`` vertices passing ``class_filter``, exactly once.

    Args:
        class_filter: n, kappa and diameter rule
        allow_large: acknowledge the 2^28-mask scan at n = 8
        mask_range: restrict to one shard ``(lo, hi)``

    Raises:
        EnumerationLimitError: if n > 8, or n = 8 without ``allow_large``
    """
    n = class_filter.n
    check_enumeration_size(n, allow_large=allow_large)
    lo, hi = mask_range if mask_range is not None else (0, mask_count(n))
    logger.debug(
        "enumerating n=%d kappa=%d diameter=%s masks [%d, %d)",
        n,
        class_filter.kappa,
        class_filter.diameter_rule,
        lo,
        hi,
    )
    for _, adj in iter_class_masks(n, class_filter.kappa, class_filter.diameter_rule, lo, hi):
        yield Graph.trusted(n, adj)


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    perms = np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)
    pairs = edge_pairs(n)
    rows = np.array([i for i, _ in pairs], dtype=np.intp)
    cols = np.array([j for _, j in pairs], dtype=np.intp)
    weights = np.array([1 << (len(pairs) - 1 - k) for k in range(len(pairs))], dtype=np.int64)
    return perms, rows, cols, weights


def canonical_form(g: Graph) -> bytes:
    """
    Minimum graph6 body over all n! relabelings of ``g``.

    Equal for two graphs exactly when they are isomorphic.

    Raises:
        EnumerationLimitError: if n > 8
    """
    if g.n > MAX_ENUMERATION_VERTICES:
        raise EnumerationLimitError(f"canonical form supports n <= {MAX_ENUMERATION_VERTICES}")
    perms, rows, cols, weights = _permutation_table(g.n)
    a = g.adjacency_matrix()
    # bit k of relabeling p is the old pair (p[i_k], p[j_k]); first bit is most significant
    bits = a[perms[:, rows], perms[:, cols]].astype(np.int64)
    keys = bits @ weights
    best = int(np.argmin(keys))
    return graph6_encode(g.relabel(perms[best].tolist()))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def dedup_isomorphs(graphs: Iterable[Graph]) -> Iterator[Graph]:
    """Keep the first graph of each isomorphism class, in stream order."""
    seen: set[bytes] = set()
    for g in graphs:
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        yield g


def count_class(class_filter: ClassFilter, *, allow_large: bool = False) -> int:
    return sum(1 for _ in enumerate_class(class_filter, allow_large=allow_large))
