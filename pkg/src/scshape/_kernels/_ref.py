"""Pure-NumPy reference implementation of the hot kernels.

Same contracts as the compiled twin in ``_fast.pyx``; used as the import-time
fallback and as the ground truth in the kernel equivalence tests.
"""

import numpy as np

BACKEND = "numpy"


def conv_full(x: np.ndarray, taps: np.ndarray) -> np.ndarray:
    """Row-wise full linear convolution of real rows with a real tap vector.

    x has shape (rows, n); returns shape (rows, n + len(taps) - 1).
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    taps = np.ascontiguousarray(taps, dtype=np.float64)
    rows, n = x.shape
    out = np.empty((rows, n + taps.size - 1), dtype=np.float64)
    for r in range(rows):
        out[r] = np.convolve(x[r], taps)
    return out


def conv_full_c(x: np.ndarray, taps: np.ndarray) -> np.ndarray:
    """Row-wise full convolution of complex rows with real taps."""
    x = np.ascontiguousarray(x, dtype=np.complex128)
    taps = np.ascontiguousarray(taps, dtype=np.float64)
    rows, n = x.shape
    out = np.empty((rows, n + taps.size - 1), dtype=np.complex128)
    for r in range(rows):
        out[r] = np.convolve(x[r], taps)
    return out


def sqdist(r: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Squared Euclidean distances |r - c|^2 on the complex plane.

    r has shape (rows, n), points shape (m,); returns (rows, n, m) float64.
    """
    r = np.asarray(r, dtype=np.complex128)
    points = np.asarray(points, dtype=np.complex128)
    d = r[:, :, None] - points[None, None, :]
    return (d.real * d.real + d.imag * d.imag).astype(np.float64, copy=False)
