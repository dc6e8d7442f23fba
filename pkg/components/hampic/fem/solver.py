import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from hampic.fem.assembly import StiffnessMatrix
from hampic.fem.errors import IncompatibleRHS, NonConvergence
from scipy import sparse
from scipy.sparse.linalg import LinearOperator, cg

logger = logging.getLogger(__name__)

preconditioners = ("none", "jacobi")

compatibility_tolerance = 1e-10
restarts = 3


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-10
    max_iter: Optional[int] = None
    preconditioner: str = "none"

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValueError(f"Solver tolerance must be positive, got {self.tol}")

        if self.max_iter is not None and self.max_iter < 1:
            raise ValueError(f"max_iter must be positive, got {self.max_iter}")

        if self.preconditioner not in preconditioners:
            raise ValueError(
                f"Unknown preconditioner {self.preconditioner!r}, "
                f"expected one of {preconditioners}"
            )


@dataclass(frozen=True, eq=False)
class FieldCoefficients:
    phi: np.ndarray
    residual_norm: float
    iterations: int


def project_rhs(F: np.ndarray, scale: Optional[float] = None) -> np.ndarray:
    """Remove the constant component of a periodic load vector.

    ``scale`` is the l1 size of the terms F was built from; it defaults to
    the l1 norm of F itself.
    """
    total = math.fsum(F)
    reference = float(np.sum(np.abs(F))) if scale is None else scale
    limit = compatibility_tolerance * reference

    if abs(total) > limit:
        raise IncompatibleRHS(total, limit)

    return F - total / F.size


def jacobi_preconditioner(matrix: sparse.spmatrix) -> LinearOperator:
    inverse = 1.0 / matrix.diagonal()

    return LinearOperator(matrix.shape, matvec=lambda r: inverse * r, dtype=float)


def _remove_mean(phi: np.ndarray) -> np.ndarray:
    return phi - math.fsum(phi) / phi.size


def solve_poisson(
    stiffness: StiffnessMatrix,
    F,
    config: SolverConfig = SolverConfig(),
    scale: Optional[float] = None,
) -> FieldCoefficients:
    """Solve M phi = F with conjugate gradients.

    The returned residual is the true residual ||M phi - F||_2 and is at
    most ``config.tol * ||F||_2``. Periodic solutions are mean free.
    """
    space = stiffness.space
    matrix = stiffness.matrix
    rhs = np.asarray(F, dtype=float)

    if rhs.shape != (space.n_dofs,):
        raise ValueError(
            f"Expected a load vector of size {space.n_dofs}, got {rhs.shape}"
        )

    if space.is_periodic:
        rhs = project_rhs(rhs, scale)

    norm = float(np.linalg.norm(rhs))

    if norm == 0.0:
        return FieldCoefficients(
            phi=np.zeros(space.n_dofs), residual_norm=0.0, iterations=0
        )

    target = config.tol * norm
    limit = config.max_iter or 10 * space.n_dofs
    use_jacobi = config.preconditioner == "jacobi"
    precond = jacobi_preconditioner(matrix) if use_jacobi else None

    phi = np.zeros(space.n_dofs)
    used = 0
    residual = norm

    for attempt in range(restarts + 1):
        count = [0]

        def tick(_xk, count=count) -> None:
            count[0] += 1

        phi, _info = cg(
            matrix,
            rhs,
            x0=phi,
            rtol=config.tol,
            atol=0.0,
            maxiter=max(limit - used, 1),
            M=precond,
            callback=tick,
        )
        used += count[0]

        if space.is_periodic:
            phi = _remove_mean(phi)

        residual = float(np.linalg.norm(matrix @ phi - rhs))

        if residual <= target:
            logger.debug("CG converged in %d iterations, residual %.3e", used, residual)
            return FieldCoefficients(phi=phi, residual_norm=residual, iterations=used)

        if used >= limit:
            break

        logger.debug(
            "CG restart %d: true residual %.3e above %.3e",
            attempt + 1,
            residual,
            target,
        )

    raise NonConvergence(used, residual, target)
