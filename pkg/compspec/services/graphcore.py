"""
Graph algorithms on neighbor bitmasks.

Connectivity, distances, bipartiteness, minimum vertex cuts and the graph6 /
edge-list interchange formats. The ``*_masks`` helpers work on raw
neighbor-mask tuples so the enumerator can call them without building
:class:`Graph` objects.
"""

import logging
from collections.abc import Iterable
from itertools import combinations

import networkx as nx

from compspec.errors import CutError, DisconnectedGraphError, Graph6Error, GraphError
from compspec.schemas.graph import CutProfile, Graph, mask_of, vertices_of

logger = logging.getLogger(__name__)

# Above this size vertex connectivity goes through networkx max-flow.
EXHAUSTIVE_CUT_LIMIT = 12

# graph6 with a single-byte size header
GRAPH6_MAX_VERTICES = 62


# --- bitmask kernels -------------------------------------------------------


def reach_masks(adj: tuple[int, ...], start: int, alive: int) -> int:
    """Vertices of ``alive`` reachable from vertex ``start`` inside ``alive``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        while frontier:
            low = frontier & -frontier
            grown |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = grown & alive & ~seen
        seen |= frontier
    return seen


def is_connected_masks(adj: tuple[int, ...], alive: int) -> bool:
    """Whether the subgraph induced by ``alive`` is connected (empty counts as not)."""
    if not alive:
        return False
    start = (alive & -alive).bit_length() - 1
    return reach_masks(adj, start, alive) == alive


def components_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, ascending by lowest vertex."""
    parts: list[int] = []
    rest = alive
    while rest:
        start = (rest & -rest).bit_length() - 1
        part = reach_masks(adj, start, alive)
        parts.append(part)
        rest &= ~part
    return parts


def eccentricity_masks(adj: tuple[int, ...], source: int, full: int) -> tuple[int, int]:
    """
    BFS from ``source`` over the whole graph.

    Returns:
        Tuple of (eccentricity, sum of distances). Assumes the graph is connected.
    """
    seen = 1 << source
    frontier = seen
    depth = 0
    total = 0
    while seen != full:
        grown = 0
        while frontier:
            low = frontier & -frontier
            grown |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = grown & ~seen
        if not frontier:
            raise DisconnectedGraphError("graph is disconnected")
        depth += 1
        total += depth * frontier.bit_count()
        seen |= frontier
    return depth, total


def diameter_masks(adj: tuple[int, ...], n: int, stop_at: int | None = None) -> int:
    """All-pairs BFS diameter; stops early once ``stop_at`` is reached."""
    full = (1 << n) - 1
    best = 0
    for v in range(n):
        ecc, _ = eccentricity_masks(adj, v, full)
        if ecc > best:
            best = ecc
            if stop_at is not None and best >= stop_at:
                break
    return best


def connectivity_masks(adj: tuple[int, ...], n: int, cap: int | None = None) -> int:
    """
    Exhaustive vertex connectivity of a connected graph.

    Tries every vertex subset by increasing size. Complete graphs get ``n - 1``.
    With ``cap`` the search stops at that value: the result is
    ``min(kappa, cap)``.
    """
    full = (1 << n) - 1
    min_degree = min(row.bit_count() for row in adj)
    limit = min_degree if cap is None else min(min_degree, cap)
    for k in range(limit):
        for subset in combinations(range(n), k):
            if not is_connected_masks(adj, full & ~mask_of(subset)):
                return k
    if min_degree == n - 1:
        return n - 1 if cap is None else min(n - 1, cap)
    if cap is not None and limit == cap:
        return cap
    # kappa <= min degree; the neighborhood of a min-degree vertex is a cut
    return min_degree


def minimum_cuts_masks(adj: tuple[int, ...], n: int, kappa: int) -> list[int]:
    """Every ``kappa``-subset whose removal disconnects the graph, ascending."""
    full = (1 << n) - 1
    cuts = []
    for subset in combinations(range(n), kappa):
        cut = mask_of(subset)
        if not is_connected_masks(adj, full & ~cut):
            cuts.append(cut)
    return sorted(cuts)


# --- constructors ----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph.trusted(n, (0,) * n)


def complete_bipartite(x: int, y: int) -> Graph:
    """K_{x,y} with parts ``0..x-1`` and ``x..x+y-1``."""
    left = (1 << x) - 1
    right = ((1 << y) - 1) << x
    return Graph.trusted(x + y, (right,) * x + (left,) * y)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """G1 ∪ G2 with the vertices of ``g2`` shifted by ``g1.n``."""
    if g1.n + g2.n > 64:
        raise GraphError("union exceeds 64 vertices")
    shifted = tuple(row << g1.n for row in g2.adj)
    return Graph.trusted(g1.n + g2.n, g1.adj + shifted)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabeled ``0..k-1`` in ascending order."""
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs at least one vertex")
    position = {old: new for new, old in enumerate(keep)}
    keep_mask = mask_of(keep)
    rows = tuple(
        mask_of(position[w] for w in vertices_of(g.adj[v] & keep_mask)) for v in keep
    )
    return Graph.trusted(len(keep), rows)


def complement(g: Graph) -> Graph:
    """G^c: edge (i, j), i != j, exactly when G has none."""
    full = g.full_mask
    return Graph.trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


# --- connectivity and distances --------------------------------------------


def is_connected(g: Graph) -> bool:
    return is_connected_masks(g.adj, g.full_mask)


def components(g: Graph, removed: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """Connected components of ``g`` minus ``removed``, ordered by bitmask."""
    alive = g.full_mask & ~mask_of(removed)
    parts = components_masks(g.adj, alive)
    return [vertices_of(part) for part in sorted(parts)]


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"graph on {g.n} vertices is disconnected")


def vertex_connectivity(g: Graph) -> int:
    """
    Minimum number of vertices whose deletion disconnects ``g``.

    Complete graphs get ``n - 1``. Exhaustive subset search up to
    ``EXHAUSTIVE_CUT_LIMIT`` vertices, networkx max-flow (Menger) above.

    Raises:
        DisconnectedGraphError: if ``g`` is not connected
    """
    _require_connected(g)
    if g.n <= EXHAUSTIVE_CUT_LIMIT:
        return connectivity_masks(g.adj, g.n)
    if g.edge_count() == g.n * (g.n - 1) // 2:
        return g.n - 1
    return nx.node_connectivity(g.to_networkx())


def diameter(g: Graph) -> int:
    """Largest shortest-path distance (all-pairs BFS)."""
    _require_connected(g)
    return diameter_masks(g.adj, g.n)


def transmission(g: Graph) -> int:
    """Sum of distances over all unordered vertex pairs (exact integer)."""
    _require_connected(g)
    full = g.full_mask
    total = sum(eccentricity_masks(g.adj, v, full)[1] for v in range(g.n))
    return total // 2


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """
    Two-coloring of ``g``, or None if it has an odd cycle.

    The part containing vertex 0 comes first.
    """
    try:
        coloring = nx.bipartite.color(g.to_networkx())
    except nx.NetworkXError:
        return None
    first = frozenset(v for v, c in coloring.items() if c == coloring[0])
    second = frozenset(range(g.n)) - first
    return first, second


# --- minimum cuts ----------------------------------------------------------


def all_minimum_cuts(g: Graph) -> list[frozenset[int]]:
    """
    Every vertex set of size kappa(g) whose removal disconnects ``g``.

    Raises:
        GraphError: for complete graphs, which have no vertex cut, or n > 12
        DisconnectedGraphError: if ``g`` is not connected
    """
    _require_connected(g)
    if g.edge_count() == g.n * (g.n - 1) // 2:
        raise GraphError("complete graphs have no vertex cut")
    if g.n > EXHAUSTIVE_CUT_LIMIT:
        raise GraphError(f"exhaustive cut listing supports n <= {EXHAUSTIVE_CUT_LIMIT}")
    kappa = connectivity_masks(g.adj, g.n)
    return [frozenset(vertices_of(cut)) for cut in minimum_cuts_masks(g.adj, g.n, kappa)]


def cut_profile(g: Graph, cut: Iterable[int]) -> CutProfile:
    """
    Split ``g`` minus a minimum cut into G_s and G_t.

    If some component has a vertex with no neighbor in the cut, the
    lowest-index such vertex is ``v``, its component goes to G_t and G_s is
    the smallest other component. Otherwise G_s is the smallest component.
    Ties go to the smallest bitmask; G_t is the union of everything else.

    Raises:
        CutError: if ``cut`` is not a minimum vertex cut of ``g``
    """
    cut_mask = mask_of(cut)
    if cut_mask & ~g.full_mask:
        raise CutError("cut contains vertices outside the graph")
    kappa = vertex_connectivity(g)
    if cut_mask.bit_count() != kappa:
        raise CutError(f"cut has {cut_mask.bit_count()} vertices, kappa is {kappa}")
    alive = g.full_mask & ~cut_mask
    parts = sorted(components_masks(g.adj, alive))
    if len(parts) < 2:
        raise CutError("removing the cut leaves the graph connected")

    v = None
    for w in vertices_of(alive):
        if not g.adj[w] & cut_mask:
            v = w
            break

    candidates = parts if v is None else [p for p in parts if not p >> v & 1]
    small = min(candidates, key=lambda p: (p.bit_count(), p))
    large = alive & ~small
    return CutProfile(
        n=g.n,
        cut=vertices_of(cut_mask),
        components=tuple(vertices_of(p) for p in parts),
        small=vertices_of(small),
        large=vertices_of(large),
        v=v,
    )


# --- interchange formats ---------------------------------------------------


def graph6_encode(g: Graph) -> bytes:
    """
    Standard graph6 without header or newline.

    Raises:
        Graph6Error: if ``g`` has more than 62 vertices
    """
    if g.n > GRAPH6_MAX_VERTICES:
        raise Graph6Error(f"single-byte graph6 header supports n <= {GRAPH6_MAX_VERTICES}")
    return nx.to_graph6_bytes(g.to_networkx(), header=False).rstrip(b"\n")


def graph6_decode(data: bytes | str) -> Graph:
    """
    Parse one graph6 string (optional ``>>graph6<<`` header, trailing newline).

    Raises:
        Graph6Error: on characters outside 63..126, a multi-byte size header
            or a body of the wrong length
    """
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("graph6 characters must lie in 63..126") from exc
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("graph6 characters must lie in 63..126")
    n = data[0] - 63
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6Error("multi-byte graph6 size headers are not supported")
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(data) - 1 != expected:
        raise Graph6Error(f"expected {expected} body bytes for n={n}, got {len(data) - 1}")
    if n == 0:
        raise Graph6Error("graphs need at least one vertex")
    try:
        graph = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError) as exc:
        raise Graph6Error(str(exc)) from exc
    return Graph.from_networkx(graph)


def to_edgelist(g: Graph) -> str:
    """Debug text format ``"n m\\nu v\\n..."``."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse the format written by :func:`to_edgelist`."""
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(u), int(v)) for u, v in rows[1:]]
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)
