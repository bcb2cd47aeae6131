"""
Adjacency spectra and Rayleigh-quotient machinery.

Full decompositions go through ``numpy.linalg.eigh``; class scans use the
batched ``eigvalsh`` path in :func:`batch_extreme_eigenvalues`. Both paths
check the trace and trace-of-square identities; full decompositions also
check the residual.
"""

import logging
from collections.abc import Sequence

import numpy as np

from compspec.errors import DisconnectedGraphError, GraphError
from compspec.schemas.graph import Graph
from compspec.schemas.spectrum import AuditRecord, Spectrum
from compspec.services.graphcore import complement, is_connected, transmission

logger = logging.getLogger(__name__)

# Solver quality gates
TRACE_TOLERANCE = 1e-8
SQUARE_TOLERANCE = 1e-6
RESIDUAL_BUDGET = 1e-9


def _as_vector(g: Graph, x: Sequence[float] | np.ndarray) -> np.ndarray:
    vec = np.asarray(x, dtype=float)
    if vec.shape != (g.n,):
        raise GraphError(f"vector has shape {vec.shape}, graph has {g.n} vertices")
    return vec


def check_spectrum_gates(matrix: np.ndarray, values: np.ndarray, residual: float) -> None:
    """
    Solver quality gates for one symmetric matrix.

    Raises:
        GraphError: if the eigenvalue sum misses the trace by more than 1e-8,
            the sum of squares misses the squared Frobenius norm by more than
            1e-6, or the residual exceeds 1e-9 * max(1, largest row sum of |A|)
    """
    a = np.asarray(matrix, dtype=float)
    trace_gap = abs(float(values.sum()) - float(np.trace(a)))
    square_gap = abs(float((values**2).sum()) - float((a * a).sum()))
    budget = RESIDUAL_BUDGET * max(1.0, float(np.abs(a).sum(axis=1).max(initial=0.0)))
    if trace_gap > TRACE_TOLERANCE:
        raise GraphError(f"eigenvalue sum misses the trace by {trace_gap:.3e}")
    if square_gap > SQUARE_TOLERANCE:
        raise GraphError(f"eigenvalue squares miss the Frobenius norm by {square_gap:.3e}")
    if residual > budget:
        raise GraphError(f"eigen residual {residual:.3e} exceeds {budget:.3e}")


def eigen_matrix(matrix: np.ndarray, *, with_vectors: bool = True) -> Spectrum:
    """
    Spectrum of a dense real symmetric matrix, values descending.

    Raises:
        GraphError: if the matrix is not symmetric or fails the quality gates
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.array_equal(a, a.T):
        raise GraphError("eigen_matrix needs a square symmetric matrix")
    values, vectors = np.linalg.eigh(a)
    values = values[::-1]
    vectors = vectors[:, ::-1]
    residual = float(np.max(np.abs(a @ vectors - vectors * values), initial=0.0))
    check_spectrum_gates(a, values, residual)
    return Spectrum(
        values=tuple(float(v) for v in values),
        vectors=tuple(tuple(float(c) for c in vectors[:, i]) for i in range(len(values)))
        if with_vectors
        else None,
        residual=residual,
    )


def eigen_symmetric(g: Graph, *, with_vectors: bool = True) -> Spectrum:
    """Full adjacency spectrum of ``g``."""
    return eigen_matrix(g.adjacency_matrix(), with_vectors=with_vectors)


def complement_spectrum(g: Graph, *, with_vectors: bool = True) -> Spectrum:
    return eigen_symmetric(complement(g), with_vectors=with_vectors)


def gated_eigvalsh(matrices: np.ndarray) -> np.ndarray:
    """
    Ascending eigenvalues of one symmetric matrix or a ``(batch, n, n)`` stack.

    Every matrix must pass the trace and trace-of-square identities.

    Raises:
        GraphError: naming the first matrix in the stack that fails
    """
    stack = np.asarray(matrices, dtype=float)
    values = np.linalg.eigvalsh(stack)
    trace_gap = np.abs(values.sum(axis=-1) - np.trace(stack, axis1=-2, axis2=-1))
    square_gap = np.abs((values**2).sum(axis=-1) - (stack * stack).sum(axis=(-2, -1)))
    failing = (trace_gap > TRACE_TOLERANCE) | (square_gap > SQUARE_TOLERANCE)
    bad = np.flatnonzero(np.atleast_1d(failing))
    if bad.size:
        raise GraphError(f"matrix {int(bad[0])} fails the trace identities")
    return values


def spectral_radius(g: Graph) -> float:
    return float(gated_eigvalsh(g.adjacency_matrix())[-1])


def least_eigenvalue(g: Graph) -> float:
    return float(gated_eigvalsh(g.adjacency_matrix())[0])


def perron_vector(g: Graph) -> np.ndarray:
    """
    Unit nonnegative eigenvector for the spectral radius.

    Taking absolute values keeps it an eigenvector even when the graph is
    disconnected and the top eigenspace is degenerate.
    """
    spectrum = eigen_symmetric(g)
    return np.abs(spectrum.vector(0))


def least_eigenvector(g: Graph) -> np.ndarray:
    """Unit eigenvector for the least eigenvalue, as returned by the solver."""
    spectrum = eigen_symmetric(g)
    return spectrum.vector(g.n - 1)


def batch_extreme_eigenvalues(matrices: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Largest and smallest eigenvalue of each matrix in a ``(batch, n, n)`` stack.

    Returns:
        Tuple of (largest, smallest) arrays of length ``batch``
    """
    stack = np.asarray(matrices, dtype=float)
    if stack.shape[0] == 0:
        return np.empty(0), np.empty(0)
    values = gated_eigvalsh(stack)
    return values[:, -1], values[:, 0]


def rayleigh_quotient(g: Graph, x: Sequence[float] | np.ndarray) -> float:
    """x^T A(G) x summed edgewise as 2 x_i x_j."""
    vec = _as_vector(g, x)
    return float(sum(2.0 * vec[i] * vec[j] for i, j in g.edges()))


def eigen_equation_residual(
    g: Graph, lam: float, x: Sequence[float] | np.ndarray
) -> float:
    """max_i |lambda x_i - sum of x_j over neighbors j of i|."""
    vec = _as_vector(g, x)
    worst = 0.0
    for i in range(g.n):
        total = sum(vec[j] for j in g.neighbors(i))
        worst = max(worst, abs(lam * vec[i] - total))
    return float(worst)


def complement_rayleigh_gap(g: Graph, h: Graph, x: Sequence[float] | np.ndarray) -> float:
    """
    x^T A(g^c) x - x^T A(h^c) x.

    The J - I parts cancel, leaving ``rayleigh_quotient(h, x) -
    rayleigh_quotient(g, x)``.
    """
    if g.n != h.n:
        raise GraphError(f"graphs have {g.n} and {h.n} vertices")
    vec = _as_vector(g, x)
    return rayleigh_quotient(h, vec) - rayleigh_quotient(g, vec)


def transmission_bound_audit(g: Graph, instance: str | None = None) -> AuditRecord:
    """
    Evaluate lambda_1(G) >= 2 sigma(G) / n on ``g`` and report; never asserts.

    Raises:
        DisconnectedGraphError: if ``g`` is not connected
    """
    if not is_connected(g):
        raise DisconnectedGraphError("transmission is undefined for disconnected graphs")
    left = spectral_radius(g)
    right = 2.0 * transmission(g) / g.n
    record = AuditRecord.evaluate(
        "transmission-bound", instance or f"graph on {g.n} vertices", left, right
    )
    logger.debug("transmission bound on %s: %.6f vs %.6f", record.instance, left, right)
    return record
