"""
Builders for the extremal families calB(s,t,kappa), B(s,t,kappa) and BB(n1,n2;kappa).

Vertex layout (fixed, so graph6 output is reproducible):

    calB:  [0,s) G_s | [s,s+t) G_t | [s+t,n) cut
    B:     [0,s) G_s | [s,s+t-1) G_t minus v | s+t-1 = v | [s+t,n) cut
    BB:    [0,n1-k) side 1 minus U | [n1-k,n1) U | [n1,n-k) side 2 minus W | [n-k,n) W

For the BB matching variant the i-th vertex of U is matched to the i-th of W.
"""

import logging

from compspec.errors import GraphError
from compspec.schemas.graph import CutProfile, Graph, mask_of
from compspec.schemas.params import BBParams, BParams
from compspec.services.graphcore import is_connected, vertex_connectivity

logger = logging.getLogger(__name__)


def _span(lo: int, hi: int) -> int:
    return ((1 << hi) - 1) & ~((1 << lo) - 1)


def _rows_from_blocks(n: int, blocks: list[tuple[int, int]]) -> tuple[int, ...]:
    """Adjacency rows from (set_a, set_b) pairs: every a in set_a joined to every b in set_b."""
    rows = [0] * n
    for left, right in blocks:
        for v in range(n):
            if left >> v & 1:
                rows[v] |= right
            if right >> v & 1:
                rows[v] |= left
    return tuple(row & ~(1 << v) for v, row in enumerate(rows))


def vertex_classes_B(p: BParams) -> dict[str, tuple[int, ...]]:
    """Vertex classes of B(s,t,kappa) in the fixed layout."""
    s, t, n = p.s, p.t, p.n
    return {
        "G_s": tuple(range(0, s)),
        "G_t_minus_v": tuple(range(s, s + t - 1)),
        "v": (s + t - 1,),
        "cut": tuple(range(s + t, n)),
    }


def vertex_classes_calB(p: BParams) -> dict[str, tuple[int, ...]]:
    s, t, n = p.s, p.t, p.n
    return {
        "G_s": tuple(range(0, s)),
        "G_t": tuple(range(s, s + t)),
        "cut": tuple(range(s + t, n)),
    }


def vertex_classes_BB(p: BBParams) -> dict[str, tuple[int, ...]]:
    """Vertex classes of BB(n1,n2;kappa) in the fixed layout."""
    n1, k, n = p.n1, p.kappa, p.n
    return {
        "side1_minus_U": tuple(range(0, n1 - k)),
        "U": tuple(range(n1 - k, n1)),
        "side2_minus_W": tuple(range(n1, n - k)),
        "W": tuple(range(n - k, n)),
    }


def build_calB(p: BParams) -> Graph:
    """
    calB(s,t,kappa): cliques on G_s, G_t and the cut, the cut joined to both sides.

    Its complement is K_{s,t} plus kappa isolated vertices.
    """
    s, t, n = p.s, p.t, p.n
    small, large, cut = _span(0, s), _span(s, s + t), _span(s + t, n)
    rows = _rows_from_blocks(
        n,
        [(small, small), (large, large), (cut, cut), (small, cut), (cut, large)],
    )
    return Graph.trusted(n, rows)


def build_B(p: BParams) -> Graph:
    """
    B(s,t,kappa): like calB, except v (last vertex of G_t) has no neighbor in the cut.

    Raises:
        ParameterError: via :meth:`BParams.for_B` when callers validate first
    """
    s, t, n = p.s, p.t, p.n
    small, large, cut = _span(0, s), _span(s, s + t), _span(s + t, n)
    large_minus_v = _span(s, s + t - 1)
    rows = _rows_from_blocks(
        n,
        [(small, small), (large, large), (cut, cut), (small, cut), (cut, large_minus_v)],
    )
    return Graph.trusted(n, rows)


def build_BB(p: BBParams) -> Graph:
    """BB(n1,n2;kappa): two cliques, U and W joined completely (join) or by a matching."""
    n1, k, n = p.n1, p.kappa, p.n
    side1, side2 = _span(0, n1), _span(n1, n)
    u_set, w_set = _span(n1 - k, n1), _span(n - k, n)
    blocks = [(side1, side1), (side2, side2)]
    if p.variant == "join":
        blocks.append((u_set, w_set))
    else:
        blocks.extend((1 << (n1 - k + i), 1 << (n - k + i)) for i in range(k))
    return Graph.trusted(n, _rows_from_blocks(n, blocks))


def embed_B(g: Graph, profile: CutProfile) -> Graph:
    """
    The B(s,t,kappa) supergraph of ``g`` on ``g``'s own vertex labels.

    Cliques on G_s, G_t and the cut, the cut joined to G_s and to G_t minus v.
    Contains ``g`` whenever the profile came from a minimum cut of ``g`` with v.
    """
    if profile.v is None:
        raise GraphError("cut profile has no vertex v; B(s,t,kappa) is undefined")
    small, large, cut = mask_of(profile.small), mask_of(profile.large), mask_of(profile.cut)
    large_minus_v = large & ~(1 << profile.v)
    rows = _rows_from_blocks(
        g.n,
        [(small, small), (large, large), (cut, cut), (small, cut), (cut, large_minus_v)],
    )
    return Graph.trusted(g.n, rows)


def validate_membership(g: Graph, n: int, kappa: int) -> bool:
    """True iff ``g`` is connected, has ``n`` vertices and vertex connectivity ``kappa``."""
    if g.n != n or not is_connected(g):
        return False
    return vertex_connectivity(g) == kappa
