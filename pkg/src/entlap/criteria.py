"""Detection criteria, the brute-force PPT oracle, and the report assembler.

Each criterion is tagged internally with its logical strength and only ever
asserts what that strength licenses:

  * iff claims (THM3_SEP_2x2, THM3A_BOUNDS) are emitted as stated, but the
    classifier cross-checks every verdict against the partial-transpose oracle
    and records contradictions in `consistency_flags` — the sufficiency
    direction of those claims fails on a large fraction of NPT states (the
    Laplacian can lift the negative eigenvalue of rho^TB).
  * sufficient-for-NPT tests (COR4) and sufficient-for-PPT tests (THM5, THM6,
    COR6) report their verdict only when the inequality fires; otherwise
    INCONCLUSIVE.
  * necessary conditions (THM3B, THM4A) stay INCONCLUSIVE and expose their
    scalars; COR4A additionally carries a permanent direction caveat.

Every inequality is evaluated with a symmetric eps band (DecisionTolerance);
inside the band the verdict is INCONCLUSIVE rather than a coin flip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import WrongDimensions
from .laplacian import laplacian_of_density
from .matops import BipartiteDims, determinant, eigvals_sym, partial_transpose
from .states import DensityMatrix, is_full_rank, rank, validate
from .wgraph import graph_from_laplacian, is_connected, max_w


class CriterionId(str, Enum):
    THM1_PURITY = "THM1_PURITY"
    THM3_SEP_2x2 = "THM3_SEP_2x2"
    COR4_NPTES = "COR4_NPTES"
    THM5_PPT = "THM5_PPT"
    THM6_PPT = "THM6_PPT"
    THM3A_BOUNDS = "THM3A_BOUNDS"
    THM3B_NPTES_BOUND = "THM3B_NPTES_BOUND"
    THM4A_BOUND = "THM4A_BOUND"
    COR4A_NPTES = "COR4A_NPTES"
    COR6_PPT = "COR6_PPT"


class Verdict(str, Enum):
    SEPARABLE = "SEPARABLE"
    ENTANGLED_NPT = "ENTANGLED_NPT"
    PPT = "PPT"
    MIXED = "MIXED"
    CONSISTENT_WITH_PURE = "CONSISTENT_WITH_PURE"
    INCONCLUSIVE = "INCONCLUSIVE"
    PRECONDITION_FAILED = "PRECONDITION_FAILED"


@dataclass(frozen=True)
class DecisionTolerance:
    """Half-width of the indeterminate band around every inequality threshold."""

    eps: float = 1e-9

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError("eps must be positive")


@dataclass(frozen=True)
class CriterionResult:
    criterion_id: CriterionId
    verdict: Verdict
    scalars: dict[str, float] = field(default_factory=dict)
    caveat: str | None = None


@dataclass(frozen=True)
class ClassificationReport:
    state_id: str
    dims: BipartiteDims
    oracle_verdict: str  # "PPT" | "NPT"
    oracle_lambda_min_ptb: float
    results: tuple[CriterionResult, ...]
    consistency_flags: tuple[CriterionId, ...]


DIRECTION_CAVEAT = (
    "direction disputed: the underlying derivation makes this inequality a necessary "
    "consequence of a negative partial transpose, not a sufficient test for it"
)

_IFF_DIMS = {(2, 2), (2, 3), (3, 2)}


def _is_small_dims(dims: BipartiteDims) -> bool:
    return (dims.d1, dims.d2) in _IFF_DIMS


# -- oracle ------------------------------------------------------------


def ppt_oracle(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> tuple[str, float]:
    """Peres ground truth: NPT iff lambda_min(rho^TB) < -eps."""
    lam = float(eigvals_sym(partial_transpose(rho.array, rho.dims))[0])
    return ("NPT" if lam < -tol.eps else "PPT"), lam


# -- criteria ----------------------------------------------------------


def purity_test(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """Determinant / negative-eigenvalue-count purity check on phi(rho) - I.

    det > eps or an even negative count reports MIXED; det < -eps with odd
    count reports CONSISTENT_WITH_PURE; the band is INCONCLUSIVE.  Caution:
    this test misfires on a sizeable fraction of genuinely pure states (see
    package docs); the classifier's oracle cross-check does not cover it since
    purity is orthogonal to the PPT question.
    """
    op = laplacian_of_density(rho).array + rho.array - np.eye(rho.n)
    det = determinant(op)
    det = det.real if isinstance(det, complex) else det
    neg = int(np.sum(eigvals_sym(op) < -tol.eps))
    scalars = {"det": float(det), "negative_eigenvalue_count": float(neg)}
    if det > tol.eps or (abs(det) > tol.eps and neg % 2 == 0):
        return CriterionResult(CriterionId.THM1_PURITY, Verdict.MIXED, scalars)
    if det < -tol.eps and neg % 2 == 1:
        return CriterionResult(CriterionId.THM1_PURITY, Verdict.CONSISTENT_WITH_PURE, scalars)
    return CriterionResult(CriterionId.THM1_PURITY, Verdict.INCONCLUSIVE, scalars)


def _lambda_min_l_plus_ptb(rho: DensityMatrix) -> float:
    lap = laplacian_of_density(rho).array
    ptb = partial_transpose(rho.array, rho.dims)
    return float(eigvals_sym(lap + ptb)[0])


def thm3_separability(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """Sign test on mu = lambda_min(L_rho + rho^TB).

    In 2x2 / 2x3 the stated claim is an iff: SEPARABLE when mu >= -eps, else
    ENTANGLED_NPT.  In larger dimensions only mu < -eps certifies anything
    (ENTANGLED_NPT); mu >= 0 is merely consistent with PPT, hence INCONCLUSIVE.
    """
    mu = _lambda_min_l_plus_ptb(rho)
    scalars = {"lambda_min_l_plus_ptb": mu}
    if _is_small_dims(rho.dims):
        if mu < -tol.eps:
            return CriterionResult(CriterionId.THM3_SEP_2x2, Verdict.ENTANGLED_NPT, scalars)
        return CriterionResult(CriterionId.THM3_SEP_2x2, Verdict.SEPARABLE, scalars)
    if mu < -tol.eps:
        return CriterionResult(CriterionId.COR4_NPTES, Verdict.ENTANGLED_NPT, scalars)
    return CriterionResult(
        CriterionId.COR4_NPTES, Verdict.INCONCLUSIVE, scalars,
        caveat="minimum is non-negative: consistent with PPT, but PPT is not certified "
               "in these dimensions")


def thm5_ppt(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """PPT if lambda_min(rho) >= lambda_max(L^TB) - lambda_min(L^TB); needs full rank."""
    if not is_full_rank(rho):
        return CriterionResult(CriterionId.THM5_PPT, Verdict.PRECONDITION_FAILED,
                               {"rank": float(rank(rho))}, caveat="state is not full rank")
    lap_ptb = partial_transpose(laplacian_of_density(rho).array, rho.dims)
    spec = eigvals_sym(lap_ptb)
    spread = float(spec[-1] - spec[0])
    lam_min_rho = float(rho.eigenvalues()[0])
    scalars = {"lambda_min_rho": lam_min_rho, "laplacian_ptb_spread": spread}
    if lam_min_rho >= spread - tol.eps:
        return CriterionResult(CriterionId.THM5_PPT, Verdict.PPT, scalars)
    return CriterionResult(CriterionId.THM5_PPT, Verdict.INCONCLUSIVE, scalars,
                           caveat="violation may or may not indicate a negative partial transpose")


def thm6_ppt(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """PPT if lambda_min(rho) >= lambda_max(L_rho); needs full rank.

    No partial transposition is computed.
    """
    if not is_full_rank(rho):
        return CriterionResult(CriterionId.THM6_PPT, Verdict.PRECONDITION_FAILED,
                               {"rank": float(rank(rho))}, caveat="state is not full rank")
    lam_max_lap = float(eigvals_sym(laplacian_of_density(rho).array)[-1])
    lam_min_rho = float(rho.eigenvalues()[0])
    scalars = {"lambda_min_rho": lam_min_rho, "lambda_max_laplacian": lam_max_lap}
    if lam_min_rho >= lam_max_lap - tol.eps:
        return CriterionResult(CriterionId.THM6_PPT, Verdict.PPT, scalars)
    return CriterionResult(CriterionId.THM6_PPT, Verdict.INCONCLUSIVE, scalars)


def thm3a_bounds(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """Two-sided 2x2 test: SEPARABLE iff -eps <= mu <= 1 + d_G + eps."""
    if (rho.dims.d1, rho.dims.d2) != (2, 2):
        raise WrongDimensions(f"criterion defined for 2x2 only, got {rho.dims.d1}x{rho.dims.d2}")
    mu = _lambda_min_l_plus_ptb(rho)
    d_g = laplacian_of_density(rho).total_degree()
    scalars = {"lambda_min_l_plus_ptb": mu, "total_degree": d_g}
    if -tol.eps <= mu <= 1.0 + d_g + tol.eps:
        return CriterionResult(CriterionId.THM3A_BOUNDS, Verdict.SEPARABLE, scalars)
    return CriterionResult(CriterionId.THM3A_BOUNDS, Verdict.ENTANGLED_NPT, scalars)


def thm3b_check(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """Necessary NPT bound lambda_min(L + rho^TB) <= max W / 2 on connected graphs.

    Certifies nothing by itself (INCONCLUSIVE); the contrapositive is reported
    in the caveat when the inequality fails.
    """
    graph = graph_from_laplacian(laplacian_of_density(rho))
    if not is_connected(graph):
        return CriterionResult(CriterionId.THM3B_NPTES_BOUND, Verdict.PRECONDITION_FAILED,
                               caveat="coherence graph is not connected")
    mu = _lambda_min_l_plus_ptb(rho)
    half = float(max_w(graph)) / 2.0
    scalars = {"lambda_min_l_plus_ptb": mu, "half_max_w": half}
    if mu > half + tol.eps:
        caveat = ("bound violated on a connected graph: by contraposition the state "
                  "cannot have a negative partial transpose")
    else:
        caveat = "bound holds: consistent with NPT but not a certificate"
    return CriterionResult(CriterionId.THM3B_NPTES_BOUND, Verdict.INCONCLUSIVE, scalars, caveat)


def thm4a_check(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """Necessary PPT bound lambda_min(L + rho^TB) <= 1 + d_G.

    Violation would certify ENTANGLED_NPT by contraposition (it never fires in
    practice: the trace bound makes the inequality nearly vacuous).
    """
    mu = _lambda_min_l_plus_ptb(rho)
    d_g = laplacian_of_density(rho).total_degree()
    scalars = {"one_plus_total_degree": 1.0 + d_g, "lambda_min_l_plus_ptb": mu}
    if mu > 1.0 + d_g + tol.eps:
        return CriterionResult(CriterionId.THM4A_BOUND, Verdict.ENTANGLED_NPT, scalars)
    return CriterionResult(CriterionId.THM4A_BOUND, Verdict.INCONCLUSIVE, scalars)


def cor4a_nptes(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """Stated NPT test: 1 + d_G < (n-1) * (max W / 2 + lambda_max(rho^TB)).

    Emitted exactly as stated, always with the direction caveat; when the
    inequality fails, the derivation-consistent contrapositive (consistent
    with PPT) is noted instead.
    """
    graph = graph_from_laplacian(laplacian_of_density(rho))
    if not is_connected(graph):
        return CriterionResult(CriterionId.COR4A_NPTES, Verdict.PRECONDITION_FAILED,
                               caveat="coherence graph is not connected")
    d_g = laplacian_of_density(rho).total_degree()
    half = float(max_w(graph)) / 2.0
    lam_max_ptb = float(eigvals_sym(partial_transpose(rho.array, rho.dims))[-1])
    lhs = 1.0 + d_g
    rhs = (rho.n - 1) * (half + lam_max_ptb)
    scalars = {"one_plus_total_degree": lhs, "rhs": rhs,
               "half_max_w": half, "lambda_max_ptb": lam_max_ptb}
    if lhs < rhs - tol.eps:
        return CriterionResult(CriterionId.COR4A_NPTES, Verdict.ENTANGLED_NPT, scalars,
                               caveat=DIRECTION_CAVEAT)
    return CriterionResult(
        CriterionId.COR4A_NPTES, Verdict.INCONCLUSIVE, scalars,
        caveat=DIRECTION_CAVEAT + "; inequality not satisfied, which by the derivation "
                                  "chain is consistent with PPT")


def cor6_ppt(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance()) -> CriterionResult:
    """PPT if lambda_min(rho) > max W / 2; full rank and connected graph required.

    In 2x2 / 2x3 a PPT verdict upgrades to SEPARABLE.
    """
    if not is_full_rank(rho):
        return CriterionResult(CriterionId.COR6_PPT, Verdict.PRECONDITION_FAILED,
                               {"rank": float(rank(rho))}, caveat="state is not full rank")
    graph = graph_from_laplacian(laplacian_of_density(rho))
    if not is_connected(graph):
        return CriterionResult(CriterionId.COR6_PPT, Verdict.PRECONDITION_FAILED,
                               caveat="coherence graph is not connected")
    half = float(max_w(graph)) / 2.0
    lam_min_rho = float(rho.eigenvalues()[0])
    scalars = {"lambda_min_rho": lam_min_rho, "half_max_w": half}
    if lam_min_rho > half + tol.eps:
        verdict = Verdict.SEPARABLE if _is_small_dims(rho.dims) else Verdict.PPT
        return CriterionResult(CriterionId.COR6_PPT, verdict, scalars)
    return CriterionResult(CriterionId.COR6_PPT, Verdict.INCONCLUSIVE, scalars)


# -- assembler ---------------------------------------------------------

_CONTRADICTS_NPT = {Verdict.SEPARABLE, Verdict.PPT}
_CONTRADICTS_PPT = {Verdict.ENTANGLED_NPT}


def classify(rho: DensityMatrix, tol: DecisionTolerance = DecisionTolerance(),
             state_id: str = "state") -> ClassificationReport:
    """Run the oracle plus every applicable criterion and flag contradictions."""
    oracle_verdict, oracle_lam = ppt_oracle(rho, tol)
    results: list[CriterionResult] = [
        purity_test(rho, tol),
        thm3_separability(rho, tol),
        thm5_ppt(rho, tol),
        thm6_ppt(rho, tol),
    ]
    if (rho.dims.d1, rho.dims.d2) == (2, 2):
        results.append(thm3a_bounds(rho, tol))
    results.append(thm3b_check(rho, tol))
    results.append(thm4a_check(rho, tol))
    results.append(cor4a_nptes(rho, tol))
    results.append(cor6_ppt(rho, tol))

    order = {cid: k for k, cid in enumerate(CriterionId)}
    results.sort(key=lambda r: order[r.criterion_id])

    flags = []
    contra = _CONTRADICTS_PPT if oracle_verdict == "PPT" else _CONTRADICTS_NPT
    for res in results:
        if res.verdict in contra:
            flags.append(res.criterion_id)
    return ClassificationReport(
        state_id=state_id,
        dims=rho.dims,
        oracle_verdict=oracle_verdict,
        oracle_lambda_min_ptb=oracle_lam,
        results=tuple(results),
        consistency_flags=tuple(flags),
    )


# -- random-state generators for the property suites --------------------


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_density(rng: np.random.Generator, dims: BipartiteDims,
                   tol: float = 1e-9) -> DensityMatrix:
    """A A^dag / tr with independent complex standard-normal entries."""
    n = dims.n
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    rho = a @ a.conj().T
    rho = rho / np.trace(rho).real
    return validate(rho, dims, tol=tol)


def random_pure_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def random_pure_density(rng: np.random.Generator, dims: BipartiteDims) -> DensityMatrix:
    v = random_pure_vector(rng, dims.n)
    return validate(np.outer(v, v.conj()), dims)


def random_product_vector(rng: np.random.Generator, dims: BipartiteDims) -> np.ndarray:
    a = random_pure_vector(rng, dims.d1)
    b = random_pure_vector(rng, dims.d2)
    return np.kron(a, b)


def random_mixture_density(rng: np.random.Generator, dims: BipartiteDims) -> DensityMatrix:
    """Convex mixture of a random pure product state and a random pure state."""
    p = rng.random()
    va = random_product_vector(rng, dims)
    vb = random_pure_vector(rng, dims.n)
    rho = p * np.outer(va, va.conj()) + (1 - p) * np.outer(vb, vb.conj())
    return validate(rho, dims)
