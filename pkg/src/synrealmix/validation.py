"""Input validation helpers shared across the package.

Conventions: images are float arrays of shape (H, W, C) with C in {1, 3} and
values in [0, 1]; label maps are integer (H, W) arrays with class indices plus
the ignore sentinel 255; masks are binary (H, W) arrays.
"""

import numpy as np

from .errors import InputValidationError, InvalidPairError

IGNORE_INDEX = 255


def check_channel(channel, name: str = "channel") -> np.ndarray:
    """Validate a single real-valued image plane (finite, 2-D, nonempty)."""
    arr = np.asarray(channel, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InputValidationError(f"{name} must be a 2-D array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputValidationError(f"{name} contains non-finite values")
    return arr


def check_image(image, name: str = "image") -> np.ndarray:
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] not in (1, 3):
        raise InputValidationError(
            f"{name} must have shape (H, W, C) with C in {{1, 3}}, got {arr.shape}"
        )
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InputValidationError(f"{name} must be at least 1x1, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputValidationError(f"{name} contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise InputValidationError(f"{name} values must lie in [0, 1]")
    return arr


def check_label_map(label, num_classes: int | None = None, name: str = "label") -> np.ndarray:
    arr = np.asarray(label)
    if arr.ndim != 2:
        raise InputValidationError(f"{name} must be a 2-D array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise InputValidationError(f"{name} must be integer-typed, got {arr.dtype}")
    if arr.size and (arr.min() < 0 or arr.max() > IGNORE_INDEX):
        raise InputValidationError(f"{name} values must lie in [0, {IGNORE_INDEX}]")
    if num_classes is not None:
        bad = (arr >= num_classes) & (arr != IGNORE_INDEX)
        if bad.any():
            raise InputValidationError(
                f"{name} contains class indices >= {num_classes} besides the ignore sentinel"
            )
    return arr


def check_mask(mask, name: str = "mask") -> np.ndarray:
    arr = np.asarray(mask)
    if arr.ndim != 2:
        raise InputValidationError(f"{name} must be a 2-D array, got shape {arr.shape}")
    vals = np.unique(arr)
    if not np.isin(vals, (0, 1)).all():
        raise InputValidationError(f"{name} must be binary, found values {vals[:8]}")
    return arr.astype(np.uint8)


def check_same_hw(a: np.ndarray, b: np.ndarray, what: str = "inputs") -> None:
    if a.shape[:2] != b.shape[:2]:
        raise InvalidPairError(f"{what} have mismatched spatial dims {a.shape[:2]} vs {b.shape[:2]}")


def check_finite(arr, name: str = "array") -> np.ndarray:
    arr = np.asarray(arr)
    if not np.all(np.isfinite(arr)):
        raise InputValidationError(f"{name} contains non-finite values")
    return arr
