from dataclasses import dataclass
from typing import Tuple

import numpy as np
from hampic.diagnostics.errors import InsufficientPeaks
from scipy import signal

default_t_min = 1.0
default_max_peaks = 8
min_peaks = 4
min_relative_prominence = 0.5


@dataclass(frozen=True, eq=False)
class DampingFit:
    gamma: float
    intercept: float
    r_squared: float
    n_peaks: int
    peak_times: np.ndarray
    direct: bool = False


def local_maxima(
    values: np.ndarray, relative_prominence: float = 0.0
) -> np.ndarray:
    """Local maxima rising at least ``relative_prominence`` of their
    height above the higher of the two surrounding troughs."""
    v = np.asarray(values, dtype=float)

    if v.size < 3:
        return np.zeros(0, dtype=np.int64)

    peaks, properties = signal.find_peaks(v, prominence=0.0)
    keep = properties["prominences"] >= relative_prominence * np.abs(v[peaks])

    return peaks[keep].astype(np.int64)


def _line_fit(t: np.ndarray, y: np.ndarray) -> Tuple[float, float, float]:
    slope, intercept = np.polyfit(t, y, 1)
    predicted = slope * t + intercept
    spread = float(np.sum((y - y.mean()) ** 2))
    residual = float(np.sum((y - predicted) ** 2))
    r_squared = 1.0 - residual / spread if spread > 0 else 1.0

    return float(slope), float(intercept), r_squared


def linear_phase(values: np.ndarray) -> int:
    """Length of the leading run of peaks that keep decaying or keep growing."""
    steps = np.sign(np.diff(np.log(values)))

    if steps.size == 0:
        return values.size

    breaks = np.flatnonzero(steps != steps[0])

    return int(breaks[0]) + 1 if breaks.size else values.size


def fit_damping_rate(
    t,
    e_d,
    t_min: float = default_t_min,
    max_peaks: int = default_max_peaks,
    fallback: bool = False,
) -> DampingFit:
    """Least-squares line through log E_d at its local maxima; gamma = -slope.

    Only prominent maxima after ``t_min`` count, and the fit stops at the first
    peak that breaks the monotone decay (or growth) of the linear phase.
    With ``fallback`` a series without enough peaks is fitted over every
    sample of the window instead of raising ``InsufficientPeaks``.
    """
    t = np.asarray(t, dtype=float)
    e_d = np.asarray(e_d, dtype=float)

    if t.shape != e_d.shape:
        raise ValueError(f"Times {t.shape} and values {e_d.shape} differ in shape")

    window = np.flatnonzero((t >= t_min) & (e_d > 0))
    maxima = local_maxima(e_d, min_relative_prominence)
    peaks = window[np.isin(window, maxima)][:max_peaks]
    peaks = peaks[: linear_phase(e_d[peaks])]
    direct = False

    if peaks.size < min_peaks:
        if not fallback or window.size < 2:
            raise InsufficientPeaks(int(peaks.size), min_peaks)

        peaks = window
        direct = True

    slope, intercept, r_squared = _line_fit(t[peaks], np.log(e_d[peaks]))

    return DampingFit(
        gamma=-slope,
        intercept=intercept,
        r_squared=r_squared,
        n_peaks=int(peaks.size),
        peak_times=t[peaks],
        direct=direct,
    )
