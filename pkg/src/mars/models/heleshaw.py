"""Two-fluid interface in a vertical cell, driven by gravity against
surface tension, evolved with a boundary-integral velocity.

Marker points z_j = x_j + i y_j sample one period of the interface
(x(alpha + 2 pi) = x(alpha) + 1).  The velocity induced by the vortex
sheet of strength gamma = S kappa_alpha - R y_alpha is the principal-value
cotangent integral, discretized by the alternate-point rule: marker j sums
only over markers of the opposite parity, which is spectrally accurate and
never hits the singularity.  An artificial tangential velocity keeps the
markers close to equally spaced in arclength.

The x coordinate carries a non-periodic unit ramp; all spectral operations
act on the periodic deviation from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..controller import init_power_law
from ..errors import ConfigurationError, ProximityError
from ..spectral import Grid1D

# Opposite-parity marker pairs closer than this fraction of the mean
# spacing make the quadrature unreliable.
PROXIMITY_FRACTION = 0.25
# Beyond this |Im|, cot(pi z) is +-i to double precision; clipping avoids
# overflow in the exponential form.
_COT_IM_CLIP = 50.0


@dataclass(frozen=True)
class HeleShawParams:
    n: int = 1024
    dt: float = 3.125e-5
    surface_tension: float = 0.1
    gravity: float = 50.0
    epsilon_u: float = 1e-10
    noise_amplitude: float = 1e-4
    t_end: float = 0.05
    snapshot_every: int = 100

    def validate(self):
        if self.surface_tension <= 0:
            raise ConfigurationError("surface_tension must be positive")
        if self.dt <= 0:
            raise ConfigurationError("dt must be positive")
        if self.t_end <= 0:
            raise ConfigurationError("t_end must be positive")
        if self.noise_amplitude < 0:
            raise ConfigurationError("noise_amplitude must be nonnegative")


def stable_cot(w):
    """cot(w) for complex w, safe for large |Im w|.

    Uses cot(w) = i (t + 1)/(t - 1) with t = exp(2 i w); the imaginary part
    is clipped where cot is already +-i to machine precision.
    """
    w = np.asarray(w, dtype=complex)
    wc = w.real + 1j * np.clip(w.imag, -_COT_IM_CLIP, _COT_IM_CLIP)
    t = np.exp(2j * wc)
    return 1j * (t + 1.0) / (t - 1.0)


@dataclass
class HeleShaw:
    params: HeleShawParams = field(default_factory=HeleShawParams)

    def __post_init__(self):
        self.params.validate()
        self.grid = Grid1D(self.params.n, 2.0 * np.pi)
        n = self.params.n
        j = np.arange(n)
        self._parity_odd = (j[:, None] + j[None, :]) % 2 == 1
        self._dalpha = 2.0 * np.pi / n
        self._ramp = j / n

    # -- state: fields are (x - ramp, y) -------------------------------

    def initial_fields(self, rng=None):
        """Flat interface plus uniform white noise on y."""
        if rng is None:
            rng = np.random.default_rng(0)
        xdev = np.zeros(self.params.n)
        y = self.params.noise_amplitude * (2.0 * rng.random(self.params.n) - 1.0)
        return (xdev, y)

    def positions(self, fields):
        xdev, y = fields
        return self._ramp + xdev, y

    # -- geometry ------------------------------------------------------

    def _diff(self, f):
        return (np.roll(f, -1) - np.roll(f, 1)) / (2.0 * self._dalpha)

    def _diff2(self, f):
        return (np.roll(f, -1) - 2.0 * f + np.roll(f, 1)) / self._dalpha**2

    def derivatives(self, fields):
        """alpha-derivatives of the position; the ramp contributes 1/(2 pi) to x_alpha."""
        xdev, y = fields
        x_a = 1.0 / (2.0 * np.pi) + self._diff(xdev)
        y_a = self._diff(y)
        x_aa = self._diff2(xdev)
        y_aa = self._diff2(y)
        s_a = np.hypot(x_a, y_a)
        if np.min(s_a) < 1e-12:
            raise ProximityError("degenerate arclength density: coincident markers")
        return x_a, y_a, x_aa, y_aa, s_a

    def curvature(self, fields):
        x_a, y_a, x_aa, y_aa, s_a = self.derivatives(fields)
        return (x_a * y_aa - y_a * x_aa) / s_a**3

    def sheet_strength(self, fields):
        """Vortex sheet strength from surface tension and gravity.

        With this curve orientation (x increasing with alpha, crests at
        kappa < 0), the gravity term carries a plus sign so that a positive
        gravity number makes the dense upper fluid amplify long-wave
        perturbations while surface tension damps short ones; the
        linearized dispersion about the flat sheet is then
        sigma(k) = (R k' - S k'^3)/2 with k' = 2 pi k / L.
        """
        kappa = self.curvature(fields)
        _, y_a, _, _, _ = self.derivatives(fields)
        return self.params.surface_tension * self._diff(kappa) + self.params.gravity * y_a

    def length(self, fields):
        """Interface arclength over one period, by the trapezoid rule."""
        *_, s_a = self.derivatives(fields)
        return float(np.sum(s_a) * self._dalpha)

    # -- boundary-integral velocity -------------------------------------

    def birkhoff_rott_velocity(self, fields, gamma):
        """Marker velocities (u, v) from the alternate-point cotangent sum."""
        x, y = self.positions(fields)
        z = x + 1j * y
        dz = z[:, None] - z[None, :]
        mask = self._parity_odd

        # Wrapped pair distances guard the quadrature before it degrades.
        wrapped_re = (dz.real + 0.5) % 1.0 - 0.5
        dist2 = wrapped_re**2 + dz.imag**2
        mean_spacing = self.length(fields) / self.params.n
        min_dist = float(np.sqrt(np.min(np.where(mask, dist2, np.inf))))
        if min_dist < PROXIMITY_FRACTION * mean_spacing:
            raise ProximityError(
                f"opposite-parity markers {min_dist:.3e} apart "
                f"(< {PROXIMITY_FRACTION} of mean spacing {mean_spacing:.3e})",
                min_distance=min_dist,
            )

        kernel = np.where(mask, stable_cot(np.pi * np.where(mask, dz, 0.25)), 0.0)
        w = -(2j * np.pi / self.params.n) * (kernel @ gamma)
        return w.real, -w.imag

    def tangential_velocity(self, fields, normal_velocity):
        """Equal-arclength tangential speed T with T(0) = 0.

        Integrates s_alpha*kappa*U along the curve and removes the secular
        part, via the spectral antiderivative of the zero-mean integrand.
        """
        x_a, y_a, _, _, s_a = self.derivatives(fields)
        integrand = s_a * self.curvature(fields) * normal_velocity
        g = integrand - integrand.mean()
        g_hat = np.fft.fft(g)
        m = self.grid.frequencies().astype(float)
        denom = 1j * m
        denom[0] = 1.0
        p_hat = g_hat / denom
        p_hat[0] = 0.0
        p_hat[self.params.n // 2] = 0.0  # Nyquist has no representable antiderivative
        p = np.fft.ifft(p_hat).real
        return p - p[0]

    def rhs(self, fields, t):
        """Time derivative of (x - ramp, y): normal motion plus redistribution."""
        gamma = self.sheet_strength(fields)
        u, v = self.birkhoff_rott_velocity(fields, gamma)
        x_a, y_a, _, _, s_a = self.derivatives(fields)
        nx, ny = -y_a / s_a, x_a / s_a
        normal_velocity = u * nx + v * ny
        tangential = self.tangential_velocity(fields, normal_velocity)
        xdot = normal_velocity * nx + tangential * x_a / s_a
        ydot = normal_velocity * ny + tangential * y_a / s_a
        return (xdot, ydot)

    # -- oracles -------------------------------------------------------

    def e_theory(self, k, length):
        """Discrete surface-tension spectrum about the flat interface.

        Evaluated at the signed-wavenumber magnitude and clamped at zero
        (the raw expression changes sign past two thirds of the index range).
        """
        n, s = self.params.n, self.params.surface_tension
        x = 2.0 * np.pi * np.abs(np.asarray(k, dtype=float)) / n
        e = (s * n**3 / length**3) * (1.0 - np.cos(x)) * np.sin(x)
        return np.maximum(e, 0.0)

    def e_smallk(self, k, length):
        """Long-wave limit (S/2 L^3) (2 pi k)^3."""
        s = self.params.surface_tension
        return s / (2.0 * length**3) * (2.0 * np.pi * np.abs(k)) ** 3

    def lambda_c_power_law(self, k, length):
        """Sufficient damping (S/3)(2 pi k / L)^3, from the long-wave spectrum."""
        s = self.params.surface_tension
        return (s / 3.0) * (2.0 * np.pi * np.abs(np.asarray(k, dtype=float)) / length) ** 3

    def ke(self, length):
        return (length / (2.0 * np.pi)) * (4.0 / (self.params.surface_tension * self.params.dt)) ** (1.0 / 3.0)

    def lambda_init(self, fields=None):
        length = self.length(fields) if fields is not None else 1.0
        s = self.params.surface_tension
        lambda0 = (s / 3.0) * (2.0 * np.pi / length) ** 3
        return init_power_law(lambda0, 3.0, self.grid)

    # -- diagnostics ---------------------------------------------------

    def oracle_slice(self, fields):
        length = self.length(fields)
        k = np.arange(self.params.n // 2 + 1)
        e = self.e_theory(k, length)
        return {
            "k": k,
            "e": e,
            "lambda_c": (2.0 / 3.0) * e,
            "ke": self.ke(length),
            "length": length,
        }

    def spectrum_slice(self, spec):
        return np.asarray(spec)[: self.params.n // 2 + 1]

    def state_columns(self, fields):
        x, y = self.positions(fields)
        return {"alpha": 2.0 * np.pi * np.arange(self.params.n) / self.params.n, "x": x, "y": y}
