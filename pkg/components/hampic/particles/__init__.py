from hampic.particles.deposit import LoadVector, deposit, field_at_particles
from hampic.particles.ensemble import (
    ParticleEnsemble,
    concatenate,
    create_ensemble,
    with_phase,
    wrap_positions,
)
from hampic.particles.errors import ParticleOutOfDomain
from hampic.particles.kernel import (
    SmoothingKernel,
    bspline_kernel,
    default_kernel,
    delta_kernel,
    evaluate,
    kernel_stencil,
)
from hampic.particles.moments import kinetic_energy, total_charge, total_momentum
from hampic.particles.snapshot import read_snapshot, write_snapshot

__all__ = [
    "LoadVector",
    "ParticleEnsemble",
    "ParticleOutOfDomain",
    "SmoothingKernel",
    "bspline_kernel",
    "concatenate",
    "create_ensemble",
    "default_kernel",
    "delta_kernel",
    "deposit",
    "evaluate",
    "field_at_particles",
    "kernel_stencil",
    "kinetic_energy",
    "read_snapshot",
    "total_charge",
    "total_momentum",
    "with_phase",
    "wrap_positions",
    "write_snapshot",
]
