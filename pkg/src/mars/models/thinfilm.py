"""Thin liquid film on a substrate with destabilizing molecular forces.

Dimensionless height equation on the periodic unit interval:

    h_t = -( h^3 h_xxx + h_x / h )_x

discretized with second-order centered differences in the expanded form
(four separate stencil terms), which is the form whose von Neumann
spectrum the stability oracles describe.  The film is linearly unstable at
long wavelengths and stiff at short ones through the fourth-derivative
term; troughs thin toward rupture in finite time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..controller import init_power_law
from ..errors import ConfigurationError, RuptureError
from ..spectral import Grid1D

# Flat-film height with the fastest-growing perturbation at one wavelength
# per unit domain: d(growth rate)/dk = 0 at k = 2*pi.
H0 = 2.0 ** (-0.25) * (2.0 * np.pi) ** (-0.5)


@dataclass(frozen=True)
class ThinFilmParams:
    n: int = 128
    dt: float = 1e-4
    amplitude: float = 0.01
    epsilon_u: float = 1e-8
    t_end: float = 1.0
    snapshot_every: int = 100

    def validate(self):
        if self.dt <= 0:
            raise ConfigurationError("dt must be positive")
        if self.t_end <= 0:
            raise ConfigurationError("t_end must be positive")


@dataclass
class ThinFilm:
    """Model object: grid, RHS stencil, and stability oracles."""

    params: ThinFilmParams = field(default_factory=ThinFilmParams)

    def __post_init__(self):
        self.params.validate()
        self.grid = Grid1D(self.params.n, 1.0)

    # -- state ---------------------------------------------------------

    def initial_fields(self, rng=None):
        x = self.grid.nodes()
        h = H0 + self.params.amplitude * np.cos(2.0 * np.pi * x)
        return (h,)

    def rhs(self, fields, t):
        (h,) = fields
        if np.any(h <= 0.0):
            raise RuptureError(f"film height reached {float(np.min(h)):.3e} at t={t:.6g}")
        dx = self.grid.spacing
        hm2, hm1 = np.roll(h, 2), np.roll(h, 1)
        hp1, hp2 = np.roll(h, -1), np.roll(h, -2)
        d4 = (hm2 - 4.0 * hm1 + 6.0 * h - 4.0 * hp1 + hp2) / dx**4
        d3 = (-hm2 + 2.0 * hm1 - 2.0 * hp1 + hp2) / (2.0 * dx**3)
        d2 = (hp1 - 2.0 * h + hm1) / dx**2
        d1 = (hp1 - hm1) / (2.0 * dx)
        return (-(h**3) * d4 - 3.0 * h**2 * d1 * d3 - d2 / h + (d1 / h) ** 2,)

    # -- oracles -------------------------------------------------------

    def e_theory(self, k, hbar):
        """Von Neumann eigenvalue of the fourth-derivative stiff term.

        k may be an array of signed wavenumbers; hbar is the frozen film
        height (the maximum over the grid is the most stringent choice).
        """
        dx = self.grid.spacing
        theta = np.abs(np.asarray(k, dtype=float)) * 2.0 * np.pi / self.params.n
        return 2.0 * hbar**3 / dx**4 * (np.cos(2.0 * theta) - 4.0 * np.cos(theta) + 3.0)

    def e_smallk(self, k, hbar):
        """Long-wave limit of e_theory: hbar^3 (2 pi k)^4."""
        return hbar**3 * (2.0 * np.pi * np.abs(k)) ** 4

    def lambda0_bound(self, hbar):
        """Smallest lambda0 such that lambda0*k^4 dominates 2*e(k)/3 at all k."""
        return (32.0 / 3.0) * np.pi**4 * hbar**3

    def ke(self, hbar):
        """Explicit stability boundary from the long-wave eigenvalue form."""
        return (2.0 / (self.params.dt * hbar**3)) ** 0.25 / (2.0 * np.pi)

    def lambda_init(self):
        hbar = H0 + self.params.amplitude
        return init_power_law(self.lambda0_bound(hbar), 4.0, self.grid)

    # -- diagnostics ---------------------------------------------------

    def hbar(self, fields):
        return float(np.max(fields[0]))

    def oracle_slice(self, fields):
        """e, lambda_c and k_e along integer modes 0..n/2, at the current height."""
        hbar = self.hbar(fields)
        k = np.arange(self.params.n // 2 + 1)
        e = self.e_theory(k, hbar)
        return {"k": k, "e": e, "lambda_c": (2.0 / 3.0) * e, "ke": self.ke(hbar)}

    def spectrum_slice(self, spec):
        """Restrict a full spectrum to the nonnegative-wavenumber half."""
        return np.asarray(spec)[: self.params.n // 2 + 1]

    def state_columns(self, fields):
        return {"x": self.grid.nodes(), "h": fields[0]}
