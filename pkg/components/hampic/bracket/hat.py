import numpy as np


def hat_matrix(B) -> np.ndarray:
    """Skew matrix with hat_matrix(B) @ v == cross(v, B)."""
    bx, by, bz = (float(c) for c in np.asarray(B, dtype=float).reshape(3))

    return np.array(
        [
            [0.0, bz, -by],
            [-bz, 0.0, bx],
            [by, -bx, 0.0],
        ]
    )
