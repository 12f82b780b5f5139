"""Fourier-transform facade for periodic real fields in 1D and 2D.

Every other module goes through this one so that the transform convention
is fixed in exactly one place: the forward transform is unnormalized and
the inverse carries the 1/n (or 1/(nx*ny)) factor.  Spectra are stored
full-length complex, indexed by the usual FFT ordering, so that per-mode
damping arrays have the same shape in 1D and 2D code paths.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, NumericalCorruptionError

# Imaginary residue (relative to the field scale) above which an inverse
# transform is flagged, and above which it is treated as corrupted.
SYMMETRY_WARN_TOL = 1e-10
SYMMETRY_ERROR_TOL = 1e-6


def _check_power_of_two(n, name):
    if n < 8:
        raise ConfigurationError(f"{name} must be >= 8 (smoothing stencils need 5 points), got {n}")
    if n & (n - 1) != 0:
        raise ConfigurationError(f"{name} must be a power of two, got {n}")


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic grid x_j = j * spacing on a domain of given length."""

    n: int
    length: float = 1.0

    def __post_init__(self):
        _check_power_of_two(self.n, "n")
        if not self.length > 0:
            raise ConfigurationError(f"length must be positive, got {self.length}")

    @property
    def spacing(self):
        return self.length / self.n

    @property
    def shape(self):
        return (self.n,)

    def nodes(self):
        """Physical coordinates x_j."""
        return np.arange(self.n) * self.spacing

    def frequencies(self):
        """Signed integer wavenumber for each spectral index (Nyquist positive)."""
        idx = np.arange(self.n)
        return np.where(idx <= self.n // 2, idx, idx - self.n)

    def forward(self, field):
        return forward(field, self)

    def inverse(self, spec):
        return inverse(spec, self)


@dataclass(frozen=True)
class Grid2D:
    """Uniform periodic grid on [0,lx) x [0,ly); arrays are indexed [jx, jy]."""

    nx: int
    ny: int
    lx: float = 2.0 * np.pi
    ly: float = 2.0 * np.pi

    def __post_init__(self):
        _check_power_of_two(self.nx, "nx")
        _check_power_of_two(self.ny, "ny")
        if not (self.lx > 0 and self.ly > 0):
            raise ConfigurationError("domain lengths must be positive")

    @property
    def dx(self):
        return self.lx / self.nx

    @property
    def dy(self):
        return self.ly / self.ny

    @property
    def shape(self):
        return (self.nx, self.ny)

    def nodes(self):
        x = np.arange(self.nx) * self.dx
        y = np.arange(self.ny) * self.dy
        return np.meshgrid(x, y, indexing="ij")

    def frequencies(self):
        """Pair of signed-wavenumber arrays broadcast to the grid shape."""
        ix = np.arange(self.nx)
        iy = np.arange(self.ny)
        kx = np.where(ix <= self.nx // 2, ix, ix - self.nx)
        ky = np.where(iy <= self.ny // 2, iy, iy - self.ny)
        return np.meshgrid(kx, ky, indexing="ij")

    def forward(self, field):
        return forward(field, self)

    def inverse(self, spec):
        return inverse(spec, self)


def mode_frequency(k_index, grid):
    """Signed wavenumber in [-n/2+1, n/2] for a 1D spectral index.

    Index n/2 (Nyquist) maps to +n/2; indices above it alias to negative
    wavenumbers.
    """
    n = grid.n
    if not 0 <= k_index < n:
        raise IndexError(f"spectral index {k_index} out of range [0, {n})")
    return int(k_index) if k_index <= n // 2 else int(k_index) - n


def forward(field, grid):
    """Unnormalized forward transform of a real field (full complex storage)."""
    field = np.asarray(field)
    if field.shape != grid.shape:
        raise ConfigurationError(f"field shape {field.shape} does not match grid shape {grid.shape}")
    if field.ndim == 1:
        return np.fft.fft(field)
    return np.fft.fft2(field)


def inverse(spec, grid):
    """Inverse transform back to a real field; carries the normalization.

    The imaginary residue is discarded.  A residue above SYMMETRY_WARN_TOL
    (relative to the field scale) is flagged with a warning; above
    SYMMETRY_ERROR_TOL it raises, since the spectrum no longer describes a
    real field.
    """
    spec = np.asarray(spec)
    if spec.shape != grid.shape:
        raise ConfigurationError(f"spectrum shape {spec.shape} does not match grid shape {grid.shape}")
    out = np.fft.ifft(spec) if spec.ndim == 1 else np.fft.ifft2(spec)
    scale = np.max(np.abs(out))
    if scale > 0:
        residue = np.max(np.abs(out.imag)) / scale
        if residue > SYMMETRY_ERROR_TOL:
            raise NumericalCorruptionError(
                f"spectrum violates conjugate symmetry: relative imaginary residue {residue:.3e}"
            )
        if residue > SYMMETRY_WARN_TOL:
            warnings.warn(
                f"discarding imaginary residue {residue:.3e} in inverse transform",
                RuntimeWarning,
                stacklevel=2,
            )
    return out.real


def conjugate_symmetry_defect(spec):
    """Max |c(k) - conj(c(-k))| over all modes, relative to the spectrum scale."""
    spec = np.asarray(spec)
    if spec.ndim == 1:
        mirrored = spec[(-np.arange(spec.shape[0])) % spec.shape[0]]
    else:
        nx, ny = spec.shape
        mirrored = spec[np.ix_((-np.arange(nx)) % nx, (-np.arange(ny)) % ny)]
    scale = np.max(np.abs(spec))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(spec - np.conj(mirrored))) / scale)
