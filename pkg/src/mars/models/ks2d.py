"""Two-dimensional Kuramoto-Sivashinsky dynamics on the periodic square.

    u_t = -N(u) - lap(u) - nu * lap^2(u),
    N(u) = (|grad u|^2 - <|grad u|^2>) / 2,

with centered differences for the gradient and the five-point Laplacian,
and the bi-Laplacian taken as the Laplacian applied twice (its von Neumann
symbol is then exactly the square of the five-point symbol, cross terms
included).  Subtracting the grid mean from the nonlinearity keeps the
spatial mean of u invariant.  The negative Laplacian feeds energy at large
scales; the fourth-order term makes the problem stiff.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..controller import init_power_law
from ..errors import ConfigurationError
from ..spectral import Grid2D


@dataclass(frozen=True)
class KSParams:
    nx: int = 128
    ny: int = 128
    nu: float = 0.2
    dt: float = 0.01
    epsilon_u: float = 1e-5
    init_amplitude: float = 1e-3
    t_end: float = 100.0
    snapshot_every: int = 1000

    def validate(self):
        if self.nu <= 0:
            raise ConfigurationError("nu must be positive")
        if self.dt <= 0:
            raise ConfigurationError("dt must be positive")
        if self.t_end <= 0:
            raise ConfigurationError("t_end must be positive")
        if self.init_amplitude < 0:
            raise ConfigurationError("init_amplitude must be nonnegative")


@dataclass
class KuramotoSivashinsky2D:
    params: KSParams = field(default_factory=KSParams)

    def __post_init__(self):
        self.params.validate()
        self.grid = Grid2D(self.params.nx, self.params.ny)

    # -- state ---------------------------------------------------------

    def initial_fields(self, rng=None):
        """Small-amplitude zero-mean uniform noise, reproducible from the rng."""
        if rng is None:
            rng = np.random.default_rng(0)
        u = self.params.init_amplitude * (2.0 * rng.random(self.grid.shape) - 1.0)
        u -= u.mean()
        return (u,)

    def laplacian(self, u):
        dx, dy = self.grid.dx, self.grid.dy
        return (np.roll(u, -1, 0) - 2.0 * u + np.roll(u, 1, 0)) / dx**2 + (
            np.roll(u, -1, 1) - 2.0 * u + np.roll(u, 1, 1)
        ) / dy**2

    def nonlinearity(self, u):
        dx, dy = self.grid.dx, self.grid.dy
        ux = (np.roll(u, -1, 0) - np.roll(u, 1, 0)) / (2.0 * dx)
        uy = (np.roll(u, -1, 1) - np.roll(u, 1, 1)) / (2.0 * dy)
        grad2 = ux**2 + uy**2
        return 0.5 * (grad2 - grad2.mean())

    def rhs(self, fields, t):
        (u,) = fields
        lap = self.laplacian(u)
        return (-self.nonlinearity(u) - lap - self.params.nu * self.laplacian(lap),)

    # -- oracles -------------------------------------------------------

    def e_theory(self, kx, ky):
        """Von Neumann eigenvalue of the discrete bi-Laplacian stiff term."""
        nu = self.params.nu
        dx, dy = self.grid.dx, self.grid.dy
        ax = np.asarray(kx, dtype=float) * dx
        ay = np.asarray(ky, dtype=float) * dy
        term_x = (2.0 * np.cos(2.0 * ax) - 8.0 * np.cos(ax) + 6.0) / dx**4
        term_y = (2.0 * np.cos(2.0 * ay) - 8.0 * np.cos(ay) + 6.0) / dy**4
        cross = (
            2.0
            * (
                2.0 * np.cos(ax + ay)
                - 4.0 * np.cos(ay)
                + 2.0 * np.cos(ax - ay)
                - 4.0 * np.cos(ax)
                + 4.0
            )
            / (dx**2 * dy**2)
        )
        return nu * (term_x + term_y + cross)

    def e_smallk(self, kx, ky):
        """Long-wave limit nu*(kx^2+ky^2)^2, used for k_e and the initial damping."""
        return self.params.nu * (np.asarray(kx, dtype=float) ** 2 + np.asarray(ky, dtype=float) ** 2) ** 2

    def ke(self):
        return (2.0 / (self.params.dt * self.params.nu)) ** 0.25

    def lambda_init(self):
        """Two thirds of the long-wave eigenvalue, which overpredicts e at large k."""
        return init_power_law(2.0 * self.params.nu / 3.0, 4.0, self.grid)

    # -- diagnostics ---------------------------------------------------

    def oracle_slice(self, fields):
        k = np.arange(self.params.nx // 2 + 1)
        e = self.e_theory(k, np.zeros_like(k))
        return {"k": k, "e": e, "lambda_c": (2.0 / 3.0) * e, "ke": self.ke()}

    def spectrum_slice(self, spec):
        """ky = 0 slice over nonnegative kx, mirroring the exported oracles."""
        return np.asarray(spec)[: self.params.nx // 2 + 1, 0]

    def state_columns(self, fields):
        x, y = self.grid.nodes()
        return {
            "jx": np.repeat(np.arange(self.params.nx), self.params.ny),
            "jy": np.tile(np.arange(self.params.ny), self.params.nx),
            "u": fields[0].ravel(),
        }
