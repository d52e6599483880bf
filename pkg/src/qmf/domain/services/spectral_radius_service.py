"""
Domain Service - Perron root of the transmission matrix.

M[v, u] = eta * s_v for every edge u -> v, i.e. M = diag(eta * s) A^T, which
shares its nonzero spectrum with eta * A * diag(s). The radius of a
non-negative matrix is the largest radius among its strongly connected
diagonal blocks, so each nontrivial block is handled separately with a
shifted power iteration (B + cI is primitive, removing periodicity).
"""

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from src.graph.domain.entities import DirectedGraph
from src.shared.domain.constants import SpectralDefaults
from src.shared.domain.exceptions import InvalidParameterError
from src.shared.domain.validation import require_positive
from src.shared.infrastructure import get_logger
from src.qmf.domain.value_objects import SpectralReport

logger = get_logger(__name__)


class SpectralRadiusService:
    """
    Domain Service: Spectral radius via power iteration.

    Business Rules:
    - L2 normalization, Rayleigh quotient estimate, relative residual test
    - Restart from a perturbed positive vector when the residual stagnates
    - Acyclic graphs (no nontrivial strong component) have radius exactly 0
    """

    @staticmethod
    def transmission_matrix(
        graph: DirectedGraph, eta: float, susceptibility: np.ndarray | None = None
    ) -> sparse.csr_matrix:
        """
        Sparse matrix M with M[v, u] = eta * s_v for each edge u -> v.

        Args:
            graph: Network.
            eta: Contagiousness (>= 0).
            susceptibility: Per-node override of the graph's susceptibilities.

        Returns:
            sparse.csr_matrix: N x N matrix without explicit zeros.
        """
        if not eta >= 0.0:
            raise InvalidParameterError(f"eta must be >= 0, got {eta!r}.")
        values = graph.susceptibility if susceptibility is None else np.asarray(susceptibility, dtype=float)
        if values.shape != (graph.node_count,) or np.any(values < 0.0):
            raise InvalidParameterError("Susceptibility override must hold one non-negative value per node.")

        matrix = graph.to_csr_matrix(eta * values[graph.out_indices]).T.tocsr()
        matrix.eliminate_zeros()
        return matrix

    @staticmethod
    def spectral_radius(
        graph: DirectedGraph,
        eta: float,
        susceptibility_override: np.ndarray | None = None,
        tol: float = SpectralDefaults.TOLERANCE,
        max_iter: int = SpectralDefaults.MAX_ITERATIONS,
    ) -> SpectralReport:
        """
        Lambda_max(eta * A * diag(s)).

        Args:
            graph: Network.
            eta: Contagiousness.
            susceptibility_override: Post-intervention susceptibilities (graph values when omitted).
            tol: Relative residual tolerance.
            max_iter: Iteration cap per strong component.

        Returns:
            SpectralReport: Estimate with convergence information.
        """
        matrix = SpectralRadiusService.transmission_matrix(graph, eta, susceptibility_override)
        return SpectralRadiusService.perron_root(matrix, tol=tol, max_iter=max_iter)

    @staticmethod
    def perron_root(
        matrix: sparse.spmatrix,
        tol: float = SpectralDefaults.TOLERANCE,
        max_iter: int = SpectralDefaults.MAX_ITERATIONS,
    ) -> SpectralReport:
        """
        Spectral radius of a non-negative sparse matrix.

        Blocks are visited by decreasing row-sum bound and skipped once the
        bound cannot beat the best radius found.

        Args:
            matrix: Square non-negative matrix.
            tol: Relative residual tolerance.
            max_iter: Iteration cap per block.

        Returns:
            SpectralReport: Largest block radius.
        """
        tol = require_positive("tol", tol)
        if int(max_iter) < 1:
            raise InvalidParameterError(f"max_iter must be >= 1, got {max_iter!r}.")

        matrix = sparse.csr_matrix(matrix)
        matrix.eliminate_zeros()
        if matrix.shape[0] == 0 or matrix.nnz == 0:
            return SpectralReport(0.0, 0, True, 0.0, tol)

        _, labels = csgraph.connected_components(matrix, directed=True, connection="strong")
        blocks = [np.flatnonzero(labels == label) for label in np.flatnonzero(np.bincount(labels) > 1)]

        bounded = []
        for nodes in blocks:
            block = matrix[nodes][:, nodes].tocsr()
            bound = min(float(block.sum(axis=1).max()), float(block.sum(axis=0).max()))
            bounded.append((bound, block))
        bounded.sort(key=lambda item: -item[0])

        radius, iterations, converged, residual = 0.0, 0, True, 0.0
        rng = np.random.default_rng(0)
        for bound, block in bounded:
            if bound <= radius:
                break
            value, spent, block_converged, block_residual = SpectralRadiusService._block_radius(
                block, tol, int(max_iter), rng
            )
            iterations += spent
            converged = converged and block_converged
            residual = max(residual, block_residual)
            radius = max(radius, value)

        if not converged:
            logger.warning("Power iteration did not converge (residual %.3g, %d iterations)", residual, iterations)
        return SpectralReport(radius, iterations, converged, residual, tol)

    @staticmethod
    def _block_radius(
        block: sparse.csr_matrix, tol: float, max_iter: int, rng: np.random.Generator
    ) -> tuple[float, int, bool, float]:
        """Shifted power iteration on one irreducible block: (radius, iterations, converged, residual)."""
        size = block.shape[0]
        shift = float(block.sum()) / size
        vector = np.full(size, 1.0 / np.sqrt(size))

        best_value, best_residual = 0.0, np.inf
        last_improvement = 0
        for iteration in range(1, max_iter + 1):
            image = block @ vector + shift * vector
            value = float(vector @ image)
            residual = float(np.linalg.norm(image - value * vector)) / value

            if residual < best_residual:
                best_value, best_residual = value, residual
                last_improvement = iteration
            if residual <= tol:
                return max(value - shift, 0.0), iteration, True, residual

            vector = image / np.linalg.norm(image)
            if iteration - last_improvement >= SpectralDefaults.STAGNATION_WINDOW:
                vector = np.abs(vector) + rng.uniform(0.0, 1.0, size) / np.sqrt(size)
                vector /= np.linalg.norm(vector)
                last_improvement = iteration

        return max(best_value - shift, 0.0), max_iter, False, best_residual
