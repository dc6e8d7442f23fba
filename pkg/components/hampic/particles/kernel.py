import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from hampic.fem import (
    AxisStencil,
    FemSpace,
    axis_stencil,
    gauss_rule,
    locate,
    reference_basis,
)
from scipy.interpolate import BSpline

shapes = ("delta", "bspline")


@dataclass(frozen=True)
class SmoothingKernel:
    shape: str = "delta"
    order: int = 1
    width: float = 0.0

    def __post_init__(self) -> None:
        if self.shape not in shapes:
            raise ValueError(
                f"Unknown kernel shape {self.shape!r}, expected one of {shapes}"
            )

        if self.shape == "bspline":
            if self.order < 0:
                raise ValueError(f"B-spline degree must be >= 0, got {self.order}")

            if not self.width > 0:
                raise ValueError(f"B-spline width must be positive, got {self.width}")

    @property
    def support(self) -> float:
        return 0.0 if self.shape == "delta" else (self.order + 1) * self.width


def delta_kernel() -> SmoothingKernel:
    return SmoothingKernel()


def bspline_kernel(order: int, width: float) -> SmoothingKernel:
    return SmoothingKernel(shape="bspline", order=order, width=width)


def default_kernel(space: FemSpace, shape: str = "delta") -> SmoothingKernel:
    if shape == "delta":
        return delta_kernel()

    return bspline_kernel(space.order, min(space.h))


@lru_cache(maxsize=None)
def reference_bspline(order: int) -> BSpline:
    knots = np.arange(order + 2) - (order + 1) / 2

    return BSpline.basis_element(knots, extrapolate=False)


def evaluate(kernel: SmoothingKernel, u) -> np.ndarray:
    """One-dimensional kernel value S(u); the delta kernel has no point values."""
    if kernel.shape == "delta":
        raise ValueError("The delta kernel cannot be evaluated pointwise")

    values = reference_bspline(kernel.order)(np.asarray(u, dtype=float) / kernel.width)

    return np.nan_to_num(values) / kernel.width


def _bspline_stencil(
    space: FemSpace, kernel: SmoothingKernel, axis: int, coords: np.ndarray
) -> AxisStencil:
    h = space.h[axis]
    lower = space.lower[axis]
    order = space.order
    coords = np.asarray(coords, dtype=float)

    offsets = kernel.width * (np.arange(kernel.order + 2) - (kernel.order + 1) / 2)
    knots = coords[:, None] + offsets
    starts, stops = knots[:, :-1], knots[:, 1:]

    # split every kernel piece at the mesh cell boundaries it crosses
    n_cuts = int(math.ceil(kernel.width / h)) + 1
    first_cut = np.floor((starts - lower) / h) + 1
    cuts = lower + (first_cut[..., None] + np.arange(n_cuts)) * h
    cuts = np.clip(cuts, starts[..., None], stops[..., None])
    breaks = np.concatenate([starts[..., None], cuts, stops[..., None]], axis=-1)
    lo, hi = breaks[..., :-1], breaks[..., 1:]

    xi_q, w_q = gauss_rule((kernel.order + order) // 2 + 1)
    length = hi - lo
    points = (lo[..., None] + length[..., None] * xi_q).reshape(coords.size, -1)
    quad = (length[..., None] * w_q).reshape(coords.size, -1)
    quad = quad * evaluate(kernel, points - coords[:, None])

    cells, xi = locate(space, axis, points, clip=False)
    values, derivatives = reference_basis(order, xi)

    base_cell, _ = locate(space, axis, starts[:, 0], clip=False)
    base = order * base_cell
    width = order * (int(math.ceil(kernel.support / h)) + 2) + 1

    stencil_values = np.zeros((coords.size, width))
    stencil_derivatives = np.zeros((coords.size, width))
    rows = np.arange(coords.size)

    for column in range(points.shape[1]):
        for local in range(order + 1):
            slot = order * cells[:, column] + local - base
            stencil_values[rows, slot] += quad[:, column] * values[:, column, local]
            stencil_derivatives[rows, slot] += (
                quad[:, column] * derivatives[:, column, local]
            )

    return AxisStencil(
        first_node=base,
        values=stencil_values,
        derivatives=stencil_derivatives / h,
    )


def kernel_stencil(
    space: FemSpace, kernel: SmoothingKernel, axis: int, coords: np.ndarray
) -> AxisStencil:
    """Exact integrals of S(x - X) W_j(x) along one axis for every X."""
    if kernel.shape == "delta":
        return axis_stencil(space, axis, coords)

    return _bspline_stencil(space, kernel, axis, coords)


def kernel_stencils(space: FemSpace, kernel: SmoothingKernel, points: np.ndarray):
    return [
        kernel_stencil(space, kernel, axis, points[:, axis])
        for axis in range(space.dim)
    ]
