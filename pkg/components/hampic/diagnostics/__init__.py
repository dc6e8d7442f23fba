from hampic.diagnostics.convergence import (
    convergence_orders,
    fitted_order,
    phase_space_rms_error,
)
from hampic.diagnostics.damping import DampingFit, fit_damping_rate, local_maxima
from hampic.diagnostics.density import (
    GridSpec,
    default_grid,
    density_grid,
    grid_filename,
    phase_space_grid,
    read_grid,
    write_grid,
)
from hampic.diagnostics.energy import electric_energy, field_energy, total_energy
from hampic.diagnostics.errors import InsufficientPeaks, MalformedRecord
from hampic.diagnostics.modes import (
    azimuthal_coefficient,
    mode_amplitude,
    mode_phase,
    phase_drift,
)
from hampic.diagnostics.record import (
    CsvWriter,
    DiagnosticsRecord,
    columns,
    diagnostics_row,
    read_csv,
)

__all__ = [
    "CsvWriter",
    "DampingFit",
    "DiagnosticsRecord",
    "GridSpec",
    "InsufficientPeaks",
    "MalformedRecord",
    "azimuthal_coefficient",
    "columns",
    "convergence_orders",
    "default_grid",
    "density_grid",
    "diagnostics_row",
    "electric_energy",
    "field_energy",
    "fit_damping_rate",
    "fitted_order",
    "grid_filename",
    "local_maxima",
    "mode_amplitude",
    "mode_phase",
    "phase_drift",
    "phase_space_grid",
    "phase_space_rms_error",
    "read_csv",
    "read_grid",
    "total_energy",
    "write_grid",
]
