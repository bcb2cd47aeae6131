"""Unit tests for spectra and the Rayleigh-quotient helpers."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from compspec.errors import DisconnectedGraphError, GraphError
from compspec.schemas.graph import Graph
from compspec.schemas.params import BParams
from compspec.schemas.spectrum import AuditRecord, Spectrum
from compspec.services.constructions import build_B
from compspec.services.graphcore import (
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
)
from compspec.services.spectra import (
    batch_extreme_eigenvalues,
    check_spectrum_gates,
    complement_rayleigh_gap,
    complement_spectrum,
    eigen_equation_residual,
    eigen_matrix,
    eigen_symmetric,
    least_eigenvalue,
    least_eigenvector,
    perron_vector,
    rayleigh_quotient,
    spectral_radius,
    transmission_bound_audit,
)


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_edge_mask(n, mask)


@st.composite
def bipartite_graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(2, max_n))
    side = draw(st.integers(0, (1 << n) - 1))
    crossing = [(i, j) for i in range(n) for j in range(i + 1, n) if (side >> i ^ side >> j) & 1]
    kept = draw(st.lists(st.sampled_from(crossing), unique=True)) if crossing else []
    return Graph.from_edges(n, kept)


class TestEigenSymmetric:
    """Tests for full decompositions."""

    def test_k2(self):
        spectrum = eigen_symmetric(complete_graph(2))
        assert spectrum.values == pytest.approx((1.0, -1.0), abs=1e-12)
        assert spectrum.spectral_radius == pytest.approx(1.0)
        assert spectrum.least == pytest.approx(-1.0)

    def test_values_descending(self, c6):
        values = eigen_symmetric(c6).values
        assert list(values) == sorted(values, reverse=True)
        assert values[0] == pytest.approx(2.0, abs=1e-12)
        assert values[-1] == pytest.approx(-2.0, abs=1e-12)

    def test_complement_of_c6_is_3_regular(self, c6):
        assert spectral_radius(complement(c6)) == pytest.approx(3.0, abs=1e-12)

    def test_complement_spectrum_b_1_3_2(self):
        """Test that B^c(1,3,2) has spectrum {2, 1, 0, 0, -1, -2}."""
        g = build_B(BParams.for_B(1, 3, 2))
        values = complement_spectrum(g).values
        assert values == pytest.approx((2.0, 1.0, 0.0, 0.0, -1.0, -2.0), abs=1e-9)

    def test_vectors_missing(self):
        spectrum = eigen_symmetric(complete_graph(3), with_vectors=False)
        with pytest.raises(ValueError):
            spectrum.vector(0)

    def test_to_record(self):
        record = eigen_symmetric(complete_graph(2)).to_record()
        assert float(record["lambda_1"]) == pytest.approx(1.0)
        assert len(record["values"]) == 2

    @given(graphs())
    @settings(max_examples=50, deadline=None)
    def test_quality_gates(self, g):
        """Test residual, trace and trace-of-square identities."""
        spectrum = eigen_symmetric(g)
        values = np.array(spectrum.values)
        assert spectrum.residual <= 1e-9
        assert abs(values.sum()) <= 1e-9
        assert abs((values**2).sum() - 2 * g.edge_count()) <= 1e-9

    @given(graphs())
    @settings(max_examples=50, deadline=None)
    def test_eigen_equation_holds_for_each_pair(self, g):
        spectrum = eigen_symmetric(g)
        for i, lam in enumerate(spectrum.values):
            assert eigen_equation_residual(g, lam, spectrum.vector(i)) <= 1e-9


class TestExtremeVectors:
    """Tests for Perron and least eigenvectors."""

    def test_perron_vector_nonnegative_unit(self, p4):
        x = perron_vector(p4)
        assert (x >= 0).all()
        assert np.linalg.norm(x) == pytest.approx(1.0)
        assert rayleigh_quotient(p4, x) == pytest.approx(spectral_radius(p4))

    def test_perron_vector_disconnected(self):
        """Test that the absolute value stays an eigenvector on K3 + K3."""
        g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        x = perron_vector(g)
        assert eigen_equation_residual(g, 2.0, x) <= 1e-9

    def test_least_eigenvector(self, c6):
        x = least_eigenvector(c6)
        assert rayleigh_quotient(c6, x) == pytest.approx(least_eigenvalue(c6), abs=1e-9)

    def test_batch_extreme_eigenvalues(self):
        stack = np.zeros((2, 3, 3))
        stack[0, :2, :2] = complete_graph(2).adjacency_matrix()
        stack[1] = complete_graph(3).adjacency_matrix()
        top, bottom = batch_extreme_eigenvalues(stack)
        assert top == pytest.approx([1.0, 2.0])
        assert bottom == pytest.approx([-1.0, -1.0])

    def test_batch_extreme_eigenvalues_empty(self):
        top, bottom = batch_extreme_eigenvalues(np.zeros((0, 3, 3)))
        assert top.size == 0 and bottom.size == 0


class TestRayleigh:
    """Tests for quadratic forms and the complement gap."""

    def test_rayleigh_quotient_edgewise(self):
        assert rayleigh_quotient(complete_graph(2), [1.0, 1.0]) == pytest.approx(2.0)
        assert rayleigh_quotient(path_graph(3), [1.0, -1.0, 1.0]) == pytest.approx(-4.0)

    def test_rayleigh_vector_shape(self, p3):
        with pytest.raises(GraphError):
            rayleigh_quotient(p3, [1.0, 1.0])

    def test_complement_gap_matches_direct_forms(self, c6):
        """Test the J - I cancellation against forms on the complements."""
        h = c6.add_edge(0, 3)
        x = np.array([0.3, -0.1, 0.5, 0.2, -0.4, 0.1])
        direct = rayleigh_quotient(complement(c6), x) - rayleigh_quotient(complement(h), x)
        assert complement_rayleigh_gap(c6, h, x) == pytest.approx(direct)

    def test_complement_gap_vertex_mismatch(self, p3, p4):
        with pytest.raises(GraphError):
            complement_rayleigh_gap(p3, p4, [1.0, 1.0, 1.0])

    @given(graphs(min_n=3, max_n=7), st.data())
    @settings(max_examples=40, deadline=None)
    def test_supergraph_gap_nonnegative(self, g, data):
        """Test that adding edges to G lowers the complement form for x >= 0."""
        x = np.array(data.draw(st.lists(st.floats(0, 1), min_size=g.n, max_size=g.n)))
        h = complete_graph(g.n)
        assert complement_rayleigh_gap(g, h, x) >= -1e-12


class TestTransmissionAudit:
    """Tests for the lambda_1 >= 2 sigma / n audit."""

    def test_p3_fails(self, p3):
        record = transmission_bound_audit(p3, "P3")
        assert record.holds is False
        assert record.left == pytest.approx(math.sqrt(2))
        assert record.right == pytest.approx(8 / 3)

    def test_complete_graph_holds(self):
        record = transmission_bound_audit(complete_graph(4))
        assert record.holds is True
        assert record.gap == pytest.approx(0.0, abs=1e-9)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            transmission_bound_audit(empty_graph(3))

    def test_c5_fails(self):
        """Test C5: lambda_1 = 2 against 2 * 15 / 5."""
        record = transmission_bound_audit(cycle_graph(5))
        assert record.right == pytest.approx(6.0)
        assert record.holds is False

    def test_audit_record_gap_sign_checked(self):
        with pytest.raises(ValueError):
            AuditRecord(claim="c", instance="i", left=0.0, right=1.0, holds=True, gap=-1.0)

    def test_spectrum_residual_nonnegative(self):
        with pytest.raises(ValueError):
            Spectrum(values=(1.0,), residual=-1.0)


class TestSolverGates:
    """Tests for the trace, trace-of-square and residual gates."""

    def test_non_symmetric_matrix_rejected(self):
        with pytest.raises(GraphError, match="symmetric"):
            eigen_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_wrong_values_fail_the_trace(self):
        with pytest.raises(GraphError, match="trace"):
            check_spectrum_gates(complete_graph(2).adjacency_matrix(), np.array([1.0, 0.0]), 0.0)

    def test_wrong_values_fail_the_squares(self):
        """Test values with the right sum but the wrong sum of squares."""
        with pytest.raises(GraphError, match="Frobenius"):
            check_spectrum_gates(complete_graph(2).adjacency_matrix(), np.array([2.0, -2.0]), 0.0)

    def test_large_residual_rejected(self):
        with pytest.raises(GraphError, match="residual"):
            check_spectrum_gates(complete_graph(2).adjacency_matrix(), np.array([1.0, -1.0]), 1.0)

    def test_residual_budget_scales_with_row_sums(self):
        a = 10.0 * complete_graph(4).adjacency_matrix()
        check_spectrum_gates(a, np.array([30.0, -10.0, -10.0, -10.0]), 2e-8)

    def test_batch_rejects_non_symmetric_member(self):
        stack = np.zeros((2, 2, 2))
        stack[0] = complete_graph(2).adjacency_matrix()
        stack[1, 0, 1] = 1.0
        with pytest.raises(GraphError, match="matrix 1"):
            batch_extreme_eigenvalues(stack)


class TestSpectralIdentities:
    """Property checks against textbook spectra."""

    @given(graphs(max_n=9), st.data())
    @settings(max_examples=1000, deadline=None)
    def test_rayleigh_quotient_between_extremes(self, g, data):
        x = np.array(data.draw(st.lists(st.floats(-1, 1), min_size=g.n, max_size=g.n)))
        norm = np.linalg.norm(x)
        assume(norm > 1e-6)
        x = x / norm
        value = rayleigh_quotient(g, x)
        assert least_eigenvalue(g) - 1e-9 <= value <= spectral_radius(g) + 1e-9

    @given(bipartite_graphs())
    @settings(max_examples=200, deadline=None)
    def test_bipartite_spectrum_symmetric(self, g):
        values = np.array(eigen_symmetric(g, with_vectors=False).values)
        assert values == pytest.approx(-values[::-1], abs=1e-9)

    @pytest.mark.parametrize(
        "g",
        [cycle_graph(n) for n in range(3, 10)]
        + [complete_bipartite(m, m) for m in range(1, 5)]
        + [complete_graph(n) for n in range(2, 8)],
    )
    def test_regular_complement_radius(self, g):
        """Test lambda_1(G^c) = n - 1 - r for r-regular G."""
        assert g.is_regular()
        r = g.degree(0)
        assert spectral_radius(complement(g)) == pytest.approx(g.n - 1 - r, abs=1e-9)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_complete_graph_spectrum(self, n):
        values = eigen_symmetric(complete_graph(n), with_vectors=False).values
        assert values == pytest.approx((n - 1,) + (-1.0,) * (n - 1), abs=1e-9)
