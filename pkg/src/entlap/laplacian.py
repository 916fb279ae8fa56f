"""The Laplacian construction L_A and the unital map phi(A) = L_A + A.

L_A takes its off-diagonal entries from the moduli of A's off-diagonal entries
(negated), and its diagonal from the row sums of those moduli, so it is always
a real symmetric, zero-row-sum, PSD matrix: a weighted-graph Laplacian.  The
trace of L_rho equals the l1-norm of coherence of rho (the graph total degree).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exact import Exact
from .matops import as_matrix, eigvals_sym
from .states import DensityMatrix, ExactMatrix


@dataclass(frozen=True)
class Laplacian:
    """Real symmetric zero-row-sum PSD matrix read off a source matrix."""

    array: np.ndarray
    exact: ExactMatrix | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.array.shape[0]

    def total_degree(self) -> float:
        return float(np.trace(self.array))


def _laplacian_from_weights(w: np.ndarray, exact_w: ExactMatrix | None) -> Laplacian:
    """Build L = diag(row sums of w) - w for a symmetric non-negative w with zero diagonal."""
    lap = np.diag(w.sum(axis=1)) - w
    lap.flags.writeable = False
    exact = None
    if exact_w is not None:
        n = len(exact_w)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(sum(exact_w[i], Exact()) )
                else:
                    row.append(-exact_w[i][j])
            rows.append(tuple(row))
        exact = tuple(rows)
    return Laplacian(array=lap, exact=exact)


def _exact_moduli(exact: ExactMatrix) -> ExactMatrix:
    n = len(exact)
    return tuple(
        tuple(Exact() if i == j else abs(exact[i][j]) for j in range(n)) for i in range(n)
    )


def laplacian_of_density(rho: DensityMatrix) -> Laplacian:
    """L with off-diagonal -|rho_ij| and diagonal sum_j |rho_ij| (j != i)."""
    w = np.abs(rho.array).astype(float)
    np.fill_diagonal(w, 0.0)
    exact_w = _exact_moduli(rho.exact) if rho.exact is not None else None
    return _laplacian_from_weights(w, exact_w)


def laplacian_of_general(a) -> Laplacian:
    """L with off-diagonal -(|a_ij| + |a_ji|)/2; equals laplacian_of_density's
    construction when the input is Hermitian."""
    m = as_matrix(a)
    absm = np.abs(m).astype(float)
    w = (absm + absm.T) / 2
    np.fill_diagonal(w, 0.0)
    return _laplacian_from_weights(w, None)


def phi(a) -> np.ndarray:
    """The unital map phi(A) = L_A + A.

    Accepts a DensityMatrix (Laplacian from |rho_ij|) or a plain matrix
    (symmetrised moduli); both agree on Hermitian input.  phi(I) = I exactly:
    a diagonal matrix has L = 0 structurally.
    """
    if isinstance(a, DensityMatrix):
        return laplacian_of_density(a).array + a.array
    m = as_matrix(a)
    return laplacian_of_general(m).array + m


def coherence_l1(rho: DensityMatrix) -> float:
    """Sum of off-diagonal moduli = Tr L_rho = graph total degree d_G."""
    return laplacian_of_density(rho).total_degree()


def kadison_defect(rho: DensityMatrix) -> float:
    """Diagnostic: lambda_min of phi(rho^2) - phi(rho)^2.

    For a positive unital *linear* map this would be >= 0 everywhere; phi is
    not linear (moduli), so the defect can be substantially negative even on
    pure states.  Reported, never assumed.
    """
    p = phi(rho)
    rho2 = rho.array @ rho.array
    p2 = laplacian_of_general(rho2).array + rho2
    return float(eigvals_sym(p2 - p @ p, herm_tol=1e-8)[0])
