"""Two-mask measurement protocol: signed/complex arrays as non-negative mask
sets, radiation-dose accounting, blur simulation, and correlation-based
reconstruction.

A signed array is realized physically as exposures through non-negative
masks.  Three encodings are supported:

* ``split_sign``  - (positive part, negative part); difference restores h.
* ``pedestal``    - (h + kappa, kappa - h); half the difference restores h,
  and the flat kappa terms cancel exactly in the difference.
* ``split_complex`` - four masks, sign-splitting real and imaginary parts.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.signal import convolve as _nd_convolve

from .core import ArgumentError, as_array
from .analysis import is_canonical, nd_autocorr

_MASK_KINDS = ("split_sign", "pedestal", "split_complex")


@dataclass(frozen=True)
class MaskSet:
    """Non-negative real mask grids encoding one signed/complex array."""

    masks: tuple
    kind: str
    pedestal: float = 0.0

    def __post_init__(self):
        if self.kind not in _MASK_KINDS:
            raise ArgumentError(f"unknown mask kind {self.kind!r}")
        masks = tuple(np.asarray(m, dtype=np.float64) for m in self.masks)
        for m in masks:
            if m.shape != masks[0].shape:
                raise ArgumentError("masks must share one shape")
            if np.any(m < 0):
                raise ArgumentError("mask entries must be non-negative")
        object.__setattr__(self, "masks", masks)


@dataclass(frozen=True)
class DoseReport:
    """Summed mask entries over all exposures (radiation-dose proxy)."""

    total_dose: float
    per_mask: tuple


def _as_grid(h) -> np.ndarray:
    arr = np.asarray(as_array(h))
    if arr.size == 0:
        raise ArgumentError("empty array")
    return arr


def _require_real(arr: np.ndarray, what: str) -> np.ndarray:
    if np.any(arr.imag != 0):
        raise ArgumentError(f"{what} requires a real-valued array; use "
                            "split_complex for complex arrays")
    return arr.real


def split_signs(h) -> MaskSet:
    """Masks (max(h,0), max(-h,0)): disjoint supports, exact recombination,
    and the lowest possible total dose for a two-mask encoding."""
    hr = _require_real(_as_grid(h), "split_signs")
    return MaskSet(masks=(np.maximum(hr, 0.0), np.maximum(-hr, 0.0)),
                   kind="split_sign")


def min_pedestal(h) -> float:
    """Smallest offset rendering both pedestal masks non-negative."""
    hr = _require_real(_as_grid(h), "pedestal_masks")
    return float(max(hr.max(), -hr.min(), 0.0))


def pedestal_masks(h, kappa: float | None = None) -> MaskSet:
    """Masks (h + kappa, kappa - h).  ``kappa`` defaults to the smallest
    admissible offset; smaller values are rejected naming the violated
    bound."""
    hr = _require_real(_as_grid(h), "pedestal_masks")
    lo_neg = float(max(-hr.min(), 0.0))
    lo_pos = float(max(hr.max(), 0.0))
    if kappa is None:
        kappa = max(lo_neg, lo_pos)
    kappa = float(kappa)
    if kappa < lo_neg:
        raise ArgumentError(
            f"pedestal {kappa} leaves h + kappa negative; need "
            f"kappa >= {lo_neg}")
    if kappa < lo_pos:
        raise ArgumentError(
            f"pedestal {kappa} leaves kappa - h negative; need "
            f"kappa >= {lo_pos}")
    return MaskSet(masks=(hr + kappa, kappa - hr), kind="pedestal",
                   pedestal=kappa)


def split_complex(h) -> MaskSet:
    """Four masks sign-splitting the real and imaginary parts:
    (Re+, Re-, Im+, Im-)."""
    arr = _as_grid(h)
    re, im = arr.real, arr.imag
    return MaskSet(masks=(np.maximum(re, 0.0), np.maximum(-re, 0.0),
                          np.maximum(im, 0.0), np.maximum(-im, 0.0)),
                   kind="split_complex")


def recombine(m: MaskSet) -> np.ndarray:
    """Invert the mask encoding back to the signed/complex array."""
    if m.kind == "split_sign":
        return (m.masks[0] - m.masks[1]).astype(np.complex128)
    if m.kind == "pedestal":
        return ((m.masks[0] - m.masks[1]) / 2.0).astype(np.complex128)
    re = m.masks[0] - m.masks[1]
    im = m.masks[2] - m.masks[3]
    return re + 1j * im


def dose(m: MaskSet) -> DoseReport:
    """Total and per-mask sums of mask entries across all exposures."""
    per = tuple(float(np.sum(mask)) for mask in m.masks)
    return DoseReport(total_dose=float(sum(per)), per_mask=per)


def blur(obj, h) -> np.ndarray:
    """Full linear (aperiodic) convolution of an object with a mask array;
    output shape is obj.shape + h.shape - 1 per axis."""
    o = _as_grid(obj)
    k = _as_grid(h)
    if o.ndim != k.ndim:
        raise ArgumentError(
            f"object ({o.ndim}-D) and mask ({k.ndim}-D) must have the same "
            "number of axes")
    return _nd_convolve(o, k, mode="full", method="direct")


def measure(obj, m: MaskSet) -> np.ndarray:
    """Simulate the per-mask exposures and recombine them: equals
    blur(obj, recombine(m)).  For the pedestal pair the difference of the two
    exposures is exactly 2*(obj * h) - the flat kappa contributions cancel -
    so the difference is halved."""
    o = _as_grid(obj)
    parts = [blur(o, mask) for mask in m.masks]
    if m.kind == "split_sign":
        return parts[0] - parts[1]
    if m.kind == "pedestal":
        return (parts[0] - parts[1]) / 2.0
    return (parts[0] - parts[1]) + 1j * (parts[2] - parts[3])


def _interior_mask(shape: tuple) -> np.ndarray:
    """Lags of an autocorrelation grid that are strictly inside the extreme
    lag of every axis (the region a delta-correlated mask must zero, apart
    from the center)."""
    inner = np.ones(shape, dtype=bool)
    for ax, n in enumerate(shape):
        sel = [slice(None)] * len(shape)
        sel[ax] = [0, n - 1]
        inner[tuple(sel)] = False
    return inner


def delta_correlation_residual(h, dual: bool = False) -> tuple:
    """(peak, worst interior off-peak magnitude) of a mask's autocorrelation,
    in n-D: interior means no axis sits at its extreme lag."""
    k = _as_grid(h)
    g = k if dual else np.conj(k)
    r = _nd_convolve(k, np.flip(g), mode="full", method="direct")
    center = tuple(n - 1 for n in k.shape)
    interior = _interior_mask(r.shape)
    interior[center] = False
    peak = complex(r[center])
    worst = float(np.abs(r[interior]).max()) if interior.any() else 0.0
    return peak, worst


def reconstruct(s_t, h, dual: bool = False) -> np.ndarray:
    """De-blur a measurement by correlating it with the known mask and
    dividing by the correlation peak.

    ``dual`` selects the conjugate-free correlation (for masks that are
    delta-correlated in the dual sense).  A mask that is not delta-correlated
    at tolerance 1e-6 still reconstructs, but with a warning.  The result is
    cropped to the original object's extent (offset h.shape-1 per axis).
    """
    st = _as_grid(s_t)
    k = _as_grid(h)
    if st.ndim != k.ndim:
        raise ArgumentError("measurement and mask dimensionality differ")
    if any(sn < kn for sn, kn in zip(st.shape, k.shape)):
        raise ArgumentError("measurement is smaller than the mask; it cannot "
                            "be a full blur of any object")
    peak, worst = delta_correlation_residual(k, dual=dual)
    if abs(peak) == 0:
        raise ArgumentError("mask has zero correlation peak; cannot "
                            "normalize the reconstruction")
    if worst > 1e-6 * abs(peak):
        warnings.warn(
            f"mask is not delta-correlated (worst interior residual {worst:g}"
            f" vs peak {abs(peak):g}); reconstruction will carry artifacts",
            stacklevel=2)
    kernel = np.flip(k) if dual else np.flip(np.conj(k))
    full = _nd_convolve(st, kernel, mode="full", method="direct") / peak
    crop = tuple(
        slice(kn - 1, kn - 1 + (sn - kn + 1))
        for sn, kn in zip(st.shape, k.shape))
    return full[crop]


@dataclass(frozen=True)
class ReconError:
    """Elementwise and relative-energy reconstruction error."""

    max_abs_error: float
    rel_l2_error: float


def recon_error(obj, obj_hat) -> ReconError:
    """Max |difference| and the L2 error relative to the reference object."""
    o = _as_grid(obj)
    oh = _as_grid(obj_hat)
    if o.shape != oh.shape:
        raise ArgumentError(
            f"shape mismatch: {o.shape} vs {oh.shape}")
    diff = oh - o
    denom = float(np.linalg.norm(o.ravel()))
    rel = float(np.linalg.norm(diff.ravel())) / denom if denom else \
        float(np.linalg.norm(diff.ravel()))
    return ReconError(max_abs_error=float(np.abs(diff).max()),
                      rel_l2_error=rel)


def end_term_bound(h, obj_max: float = 1.0, dual: bool = False) -> float:
    """Worst-case reconstruction error from the mask's off-center
    autocorrelation terms: (sum of off-center |r|) * obj_max / |peak|."""
    k = _as_grid(h)
    r = nd_autocorr(k) if not dual else _nd_convolve(
        k, np.flip(k), mode="full", method="direct")
    center = tuple(n - 1 for n in k.shape)
    peak = abs(complex(r[center]))
    if peak == 0:
        raise ArgumentError("mask has zero correlation peak")
    total = float(np.abs(r).sum()) - abs(complex(r[center]))
    return total * float(obj_max) / peak
