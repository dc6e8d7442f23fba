from dataclasses import dataclass, field
from typing import Optional

from hampic.fem import (
    FemSpace,
    FieldCoefficients,
    SolverConfig,
    StiffnessMatrix,
    assemble_stiffness,
)
from hampic.parallel import ParallelConfig
from hampic.particles import ParticleEnsemble, SmoothingKernel, delta_kernel


@dataclass(frozen=True, eq=False)
class FieldModel:
    space: FemSpace
    stiffness: StiffnessMatrix
    kernel: SmoothingKernel = field(default_factory=delta_kernel)
    rho0: float = 0.0
    solver: SolverConfig = SolverConfig()
    parallel: ParallelConfig = ParallelConfig()


def field_model(
    space: FemSpace,
    kernel: Optional[SmoothingKernel] = None,
    rho0: float = 0.0,
    solver: Optional[SolverConfig] = None,
    parallel: Optional[ParallelConfig] = None,
) -> FieldModel:
    return FieldModel(
        space=space,
        stiffness=assemble_stiffness(space),
        kernel=kernel or delta_kernel(),
        rho0=rho0,
        solver=solver or SolverConfig(),
        parallel=parallel or ParallelConfig(),
    )


@dataclass(frozen=True, eq=False)
class SimulationState:
    ensemble: ParticleEnsemble
    time: float = 0.0
    field: Optional[FieldCoefficients] = None
    steps: int = 0
