"""Correlation engines (aperiodic, periodic, conjugate-free dual) for 1-D
sequences and n-D grids, condition checkers, and quality metrics.

Lag convention: xcorr(f, g)[k] = sum_i c(f_i) * g_{i+k} for k from -(|f|-1)
to |g|-1, where c is conjugation when ``conjugate`` is true.  A profile's
zero lag therefore sits at index |f|-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.signal import convolve as _nd_convolve

from .core import DEFAULT_TOL, ArgumentError, as_array, dft

_KINDS = ("aperiodic", "periodic", "dual_aperiodic")


@dataclass(frozen=True)
class CorrelationProfile:
    """Full correlation vector plus derived summary values.

    ``peak`` is the magnitude of the zero-lag value (``peak_value`` keeps the
    complex value itself); ``max_interior_offpeak`` is the largest magnitude
    over lags excluding zero lag and, for aperiodic kinds, the two extreme
    lags.
    """

    values: np.ndarray
    kind: str
    lags: np.ndarray
    peak_value: complex
    end_values: tuple
    max_interior_offpeak: float

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ArgumentError(f"unknown profile kind {self.kind!r}")

    @property
    def peak(self) -> float:
        return abs(self.peak_value)

    def __len__(self) -> int:
        return self.values.size


def _profile(values: np.ndarray, kind: str, lags: np.ndarray,
             zero_index: int) -> CorrelationProfile:
    mags = np.abs(values)
    interior = np.ones(values.size, dtype=bool)
    interior[zero_index] = False
    if kind != "periodic" and values.size > 1:
        interior[0] = False
        interior[-1] = False
    worst = float(mags[interior].max()) if interior.any() else 0.0
    return CorrelationProfile(
        values=values,
        kind=kind,
        lags=lags,
        peak_value=complex(values[zero_index]),
        end_values=(complex(values[0]), complex(values[-1])),
        max_interior_offpeak=worst,
    )


def xcorr(f, g, conjugate: bool = True) -> CorrelationProfile:
    """All |f|+|g|-1 aperiodic correlation lags of f against g."""
    a, b = as_array(f), as_array(g)
    if a.ndim != 1 or b.ndim != 1:
        raise ArgumentError("xcorr expects 1-D sequences")
    kernel = np.conj(a)[::-1] if conjugate else a[::-1]
    values = np.convolve(b, kernel)
    lags = np.arange(-(a.size - 1), b.size)
    kind = "aperiodic" if conjugate else "dual_aperiodic"
    return _profile(values, kind, lags, a.size - 1)


def autocorr(f) -> CorrelationProfile:
    """Aperiodic autocorrelation (conjugating)."""
    return xcorr(f, f, conjugate=True)


def dual_autocorr(f) -> CorrelationProfile:
    """Conjugate-free autocorrelation sum_i f_i * f_{i+k}; the delta-like
    profile that complex-scaled canonical families retain."""
    return xcorr(f, f, conjugate=False)


def periodic_autocorr(f) -> CorrelationProfile:
    """Cyclic autocorrelation at shifts 0..N-1 (conjugating)."""
    a = as_array(f)
    if a.ndim != 1:
        raise ArgumentError("periodic_autocorr expects a 1-D sequence")
    if a.size < 2:
        raise ArgumentError("periodic autocorrelation needs length >= 2")
    ac = np.conj(a)
    values = np.array([np.sum(ac * np.roll(a, -k)) for k in range(a.size)])
    return _profile(values, "periodic", np.arange(a.size), 0)


def nd_autocorr(grid) -> np.ndarray:
    """Full aperiodic autocorrelation of an n-D grid (conjugating).

    Output axis a has length 2*shape[a]-1 with the zero lag at its center.
    Direct (non-FFT) convolution keeps integer-valued grids exact.
    """
    g = np.asarray(grid, dtype=np.complex128)
    if g.size == 0:
        raise ArgumentError("empty grid")
    return _nd_convolve(g, np.flip(np.conj(g)), mode="full", method="direct")


@dataclass(frozen=True)
class CanonicalReport:
    """Outcome of the delta-correlation check.

    ``energy`` is sum |f_i|^2, the reference scale for the tolerance; it
    equals ``peak`` for the conjugating autocorrelation but can differ (even
    vanish) for the conjugate-free center value, so the residual threshold is
    always taken relative to the energy.
    """

    is_canonical: bool
    tolerance: float
    peak: float
    energy: float
    worst_lag: int
    worst_residual: float

    def __bool__(self) -> bool:
        return self.is_canonical


def is_canonical(f, tol: float = DEFAULT_TOL, dual: bool = False
                 ) -> CanonicalReport:
    """Check that every autocorrelation lag except 0 and +-(N-1) has
    magnitude at most tol * P, where P = sum |f_i|^2 is the sequence energy.
    ``dual`` switches to the conjugate-free autocorrelation."""
    if tol <= 0:
        raise ArgumentError("tol must be positive")
    energy = float(np.sum(np.abs(as_array(f)) ** 2))
    prof = dual_autocorr(f) if dual else autocorr(f)
    n = (prof.values.size + 1) // 2
    mags = np.abs(prof.values)
    interior = np.ones(prof.values.size, dtype=bool)
    interior[n - 1] = False
    if prof.values.size > 1:
        interior[0] = False
        interior[-1] = False
    if interior.any():
        idx = int(np.argmax(np.where(interior, mags, -1.0)))
        worst_lag = int(prof.lags[idx])
        worst = float(mags[idx])
    else:
        worst_lag = 0
        worst = 0.0
    return CanonicalReport(
        is_canonical=bool(worst <= tol * energy),
        tolerance=tol,
        peak=prof.peak,
        energy=energy,
        worst_lag=worst_lag,
        worst_residual=worst,
    )


def is_perfect(f, tol: float = DEFAULT_TOL) -> bool:
    """True when every non-zero cyclic shift correlates to at most
    tol * peak."""
    if tol <= 0:
        raise ArgumentError("tol must be positive")
    prof = periodic_autocorr(f)
    off = np.abs(prof.values[1:])
    return bool(off.max() <= tol * prof.peak)


def _offpeak_power(f) -> tuple:
    a = as_array(f)
    if a.ndim != 1:
        raise ArgumentError("merit_factor expects a 1-D sequence")
    if a.size < 2:
        raise ArgumentError("merit factor is undefined for length-1 input")
    energy = float(np.sum(np.abs(a) ** 2))
    if energy == 0:
        raise ArgumentError("merit factor is undefined for the zero sequence")
    r = np.convolve(a, np.conj(a)[::-1])
    side = r[a.size:]  # strictly positive lags
    return energy, float(np.sum(np.abs(side) ** 2))


def merit_factor(f) -> float:
    """E^2 / (2 * sum over positive lags of |r_k|^2), E the sequence energy.
    Returns +inf when every off-peak lag is zero."""
    energy, sidepower = _offpeak_power(f)
    if sidepower == 0:
        return math.inf
    return energy * energy / (2.0 * sidepower)


def merit_factor_exact(f) -> Fraction:
    """Merit factor as an exact Fraction; requires integer-valued elements."""
    a = as_array(f)
    if a.ndim != 1 or a.size < 2:
        raise ArgumentError("merit_factor_exact expects a 1-D sequence of "
                            "length >= 2")
    if np.any(a.imag != 0) or np.any(a.real != np.round(a.real)):
        raise ArgumentError("merit_factor_exact requires integer elements")
    ints = [int(v) for v in a.real]
    n = len(ints)
    energy = sum(v * v for v in ints)
    if energy == 0:
        raise ArgumentError("merit factor is undefined for the zero sequence")
    sidepower = 0
    for k in range(1, n):
        rk = sum(ints[i] * ints[i + k] for i in range(n - k))
        sidepower += rk * rk
    if sidepower == 0:
        raise ArgumentError("all off-peak lags are zero (infinite merit "
                            "factor)")
    return Fraction(energy * energy, 2 * sidepower)


def spectral_flatness(f) -> float:
    """min/max magnitude ratio over the (2N-1)-padded DFT bins; 1 means a
    perfectly flat spectrum."""
    a = as_array(f)
    if a.ndim != 1:
        raise ArgumentError("spectral_flatness expects a 1-D sequence")
    spec = np.abs(dft(a, 2 * a.size - 1))
    top = float(spec.max())
    if top == 0:
        raise ArgumentError("spectral flatness is undefined for the zero "
                            "sequence")
    return float(spec.min()) / top


def dual_cross_spectrum(f, padded_length: int | None = None) -> np.ndarray:
    """DFT(f) * DFT(reversed f): the spectrum whose inverse transform is the
    conjugate-free autocorrelation.  For a dual-canonical sequence every bin
    magnitude stays within 2*|f_1*f_N| of the dual peak |sum f_i^2|."""
    a = as_array(f)
    if a.ndim != 1:
        raise ArgumentError("dual_cross_spectrum expects a 1-D sequence")
    if padded_length is None:
        padded_length = 2 * a.size - 1
    return dft(a, padded_length) * dft(a[::-1], padded_length)
