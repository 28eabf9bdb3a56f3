"""Momentum-space spectra and their position-space wavelet signals.

A spectrum g(k) sampled on a k-grid is turned into a signal on a u-grid by
the oscillatory synthesis integral

    classical:  F(u) = (2*pi)**-0.5        * integral g(k) exp(i k u) dk
    wavelet:    G(u) = (2*pi*p)**-0.5      * integral g(k) exp(i k u) dk

where p is the mean momentum of the spectrum.  The wavelet normalisation
carries a 1/sqrt(p) that makes the signal norm transform covariantly under
boosts; see the covariance module.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .numerics import DataError, Grid, GridFunction, integrate

__all__ = [
    "SpectralFunction",
    "WaveletSignal",
    "gaussian_spectrum",
    "flat_spectrum",
    "spectrum_from_samples",
    "norm_squared",
    "mean_momentum",
    "synthesize",
    "edge_leakage",
]

#: synthesis matrix is built in row blocks of this many u nodes to bound memory
_BLOCK_ROWS = 512


@dataclass(frozen=True, eq=False)
class SpectralFunction:
    """Complex spectrum g(k) on a momentum grid.

    ``reference_scale`` is the positive scale sigma used by the multiplier
    pair sqrt(p/sigma), sqrt(sigma/p); by default the factories set it to
    the spectrum's own mean momentum so the pair starts at (1, 1).
    """

    data: GridFunction
    reference_scale: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.reference_scale) and self.reference_scale > 0.0):
            raise ValueError(
                f"reference scale must be positive, got {self.reference_scale}"
            )

    @property
    def grid(self) -> Grid:
        return self.data.grid


@dataclass(frozen=True, eq=False)
class WaveletSignal:
    """Synthesised signal G(u) on a position grid, tagged with the mean
    momentum p that entered its normalisation."""

    data: GridFunction
    mean_momentum: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.mean_momentum) and self.mean_momentum > 0.0):
            raise ValueError(
                f"mean momentum must be positive, got {self.mean_momentum}"
            )

    @property
    def grid(self) -> Grid:
        return self.data.grid


def _default_scale(data: GridFunction, reference_scale: float | None) -> float:
    if reference_scale is not None:
        return reference_scale
    dens = GridFunction(data.grid, np.abs(data.values) ** 2)
    n2 = integrate(dens).real
    if n2 <= 0.0:
        return 1.0
    num = integrate(GridFunction(data.grid, data.grid.nodes * dens.values)).real
    return num / n2


def gaussian_spectrum(
    grid: Grid,
    center: float,
    width: float,
    reference_scale: float | None = None,
) -> SpectralFunction:
    """Gaussian bump g(k) = exp(-(k - center)**2 / (2 width**2)), peak value 1.

    The grid must sit at positive momenta (lower bound > 0) so that the
    photon map and the mean momentum stay well defined.
    """
    if not (np.isfinite(center) and center > 0.0):
        raise ValueError(f"center must be positive, got {center}")
    if not (np.isfinite(width) and width > 0.0):
        raise ValueError(f"width must be positive, got {width}")
    if grid.lower <= 0.0:
        raise ValueError(
            f"gaussian spectrum needs a positive-momentum grid, lower bound is {grid.lower}"
        )
    values = np.exp(-((grid.nodes - center) ** 2) / (2.0 * width**2))
    data = GridFunction(grid, values)
    return SpectralFunction(data, _default_scale(data, reference_scale))


def flat_spectrum(
    grid: Grid,
    support_lower: float,
    support_upper: float,
    reference_scale: float | None = None,
) -> SpectralFunction:
    """Indicator spectrum: 1 on [support_lower, support_upper], 0 elsewhere."""
    if not support_lower < support_upper:
        raise ValueError(
            f"flat support needs lower < upper, got [{support_lower}, {support_upper}]"
        )
    if support_lower <= 0.0:
        raise ValueError(
            f"flat spectrum support must sit at positive momenta, got lower {support_lower}"
        )
    nodes = grid.nodes
    values = ((nodes >= support_lower) & (nodes <= support_upper)).astype(float)
    data = GridFunction(grid, values)
    return SpectralFunction(data, _default_scale(data, reference_scale))


def spectrum_from_samples(
    grid: Grid,
    values: np.ndarray,
    reference_scale: float | None = None,
) -> SpectralFunction:
    """Wrap explicit complex samples as a spectrum."""
    data = GridFunction(grid, values)
    return SpectralFunction(data, _default_scale(data, reference_scale))


def norm_squared(g: SpectralFunction) -> float:
    """integral |g(k)|**2 dk by trapezoid quadrature."""
    return integrate(g.data.map_values(lambda v: np.abs(v) ** 2)).real


def mean_momentum(g: SpectralFunction) -> float:
    """p = integral k |g|**2 dk / integral |g|**2 dk.

    Raises DataError when the spectrum has zero norm (the ratio is then
    undefined) or when the result is not positive.
    """
    dens = np.abs(g.data.values) ** 2
    n2 = integrate(GridFunction(g.grid, dens)).real
    if n2 <= 0.0:
        raise DataError("mean momentum undefined for a zero-norm spectrum")
    p = integrate(GridFunction(g.grid, g.grid.nodes * dens)).real / n2
    if p <= 0.0:
        raise DataError(f"mean momentum must be positive, got {p}")
    return p


def _oscillatory_sum(data: GridFunction, u: np.ndarray) -> np.ndarray:
    """Quadrature of g(k) exp(i k u) over k for every u, in row blocks."""
    k = data.grid.nodes
    coeff = data.grid.weights * data.values
    out = np.empty(u.shape, dtype=np.complex128)
    for start in range(0, u.size, _BLOCK_ROWS):
        blk = u[start : start + _BLOCK_ROWS]
        out[start : start + _BLOCK_ROWS] = np.exp(1j * np.outer(blk, k)) @ coeff
    return out


def synthesize(
    g: SpectralFunction,
    u_grid: Grid,
    mode: str = "wavelet",
    momentum: float | None = None,
) -> WaveletSignal:
    """Evaluate the synthesis integral of g on the position grid.

    mode "wavelet" uses the (2 pi p)**-0.5 normalisation with p equal to
    ``momentum`` when given, otherwise the spectrum's own mean momentum.
    mode "classical" uses (2 pi)**-0.5 and tags the signal with p = 1.
    """
    if mode not in ("wavelet", "classical"):
        raise ValueError(f"mode must be 'wavelet' or 'classical', got {mode!r}")
    if mode == "wavelet":
        p = momentum if momentum is not None else mean_momentum(g)
        if not (np.isfinite(p) and p > 0.0):
            raise DataError(f"wavelet normalisation needs p > 0, got {p}")
        prefactor = 1.0 / np.sqrt(2.0 * np.pi * p)
    else:
        if momentum is not None:
            raise ValueError("momentum applies only to wavelet mode")
        p = 1.0
        prefactor = 1.0 / np.sqrt(2.0 * np.pi)
    values = prefactor * _oscillatory_sum(g.data, u_grid.nodes)
    return WaveletSignal(GridFunction(u_grid, values), p)


def edge_leakage(sig: WaveletSignal) -> float:
    """max(|G| at the two u-grid ends) / max |G| over the grid.

    A diagnostic for truncation of the synthesis window: values near zero
    mean the signal has decayed before the grid ends.
    """
    mag = np.abs(sig.data.values)
    peak = mag.max()
    if peak <= 0.0:
        raise DataError("edge leakage undefined for an identically zero signal")
    return float(max(mag[0], mag[-1]) / peak)
