"""Exploratory probe: Hele-Shaw fixed point, linear spectrum, closed loop."""
import sys, time
sys.path.insert(0, "src")
import numpy as np
from mars.models.heleshaw import HeleShaw, HeleShawParams
from mars.stepper import richardson_step
from mars.noise import noise_measure_max
from mars.controller import ControllerConfig, update_lambda
from mars.errors import BlowUpError, ProximityError

# 1) flat fixed point, gamma == 0
hs = HeleShaw(HeleShawParams(n=256))
fields = (np.zeros(256), np.zeros(256))
g = hs.sheet_strength(fields)
print("flat gamma max:", np.abs(g).max())
u, v = hs.birkhoff_rott_velocity(fields, g)
print("flat velocity max:", np.abs(u).max(), np.abs(v).max())

# 2) constant gamma on flat sheet -> zero velocity by parity
u, v = hs.birkhoff_rott_velocity(fields, np.ones(256) * 3.7)
print("const-gamma velocity max:", np.abs(u).max(), np.abs(v).max())

# 3) measured single-mode decay vs analytic spectrum (surface tension only)
hs = HeleShaw(HeleShawParams(n=1024, gravity=0.0))
n = 1024
alpha = 2 * np.pi * np.arange(n) / n
L = 1.0
print("k   e_measured      e_theory       rel.err")
for k in (1, 2, 4, 8, 16, 32, 64, 128):
    eps = 1e-7
    fields = (np.zeros(n), eps * np.sin(k * alpha))
    xdot, ydot = hs.rhs(fields, 0.0)
    yhat = np.fft.fft(fields[1])
    vhat = np.fft.fft(ydot)
    rate = -np.real(vhat[k] / yhat[k])
    e_th = hs.e_theory(np.array([k]), hs.length(fields))[0]
    print(f"{k:4d} {rate:14.6e} {e_th:14.6e} {abs(rate-e_th)/e_th:10.2e}")

# 4) closed loop at N=256: 2000 steps
t0 = time.time()
p = HeleShawParams(n=256)
hs = HeleShaw(p)
rng = np.random.default_rng(1234)
fields = hs.initial_fields(rng)
lam = hs.lambda_init(fields)
cfg = ControllerConfig(epsilon_u=p.epsilon_u, zero_seed=2.0 / (3.0 * p.dt))
t = 0.0
nsteps = 2000
for step in range(1, nsteps + 1):
    try:
        fields, E = richardson_step(fields, t, hs.rhs, lam, hs.grid, p.dt)
        t += p.dt
        eps = noise_measure_max(E[0], E[1])
        lam = update_lambda(lam, eps, cfg)
    except (BlowUpError, ProximityError) as exc:
        print(f"run ended at step {step}: {type(exc).__name__}: {exc}")
        break
    if step % 400 == 0 or step == nsteps:
        o = hs.oracle_slice(fields)
        ke, L, lc = o["ke"], o["length"], o["lambda_c"]
        half = lam[: p.n // 2 + 1]
        lo = int(np.ceil(ke + 1))
        hi = p.n // 3
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(lc > 0, half / lc, np.nan)
        band = ratio[lo:hi + 1]
        below = ratio[1:max(1, int(np.floor(ke - 1)))]
        ampl = np.abs(fields[1]).max()
        print(f"step {step:5d} t={t:.5f} L={L:.4f} ke={ke:.1f} maxy={ampl:.4f} "
              f"band[{lo},{hi}] lam/lc min={np.nanmin(band):.3f} max={np.nanmax(band):.3f} "
              f"lowk max={np.nanmax(below) if len(below) else float('nan'):.2e}")
print(f"elapsed {time.time()-t0:.1f}s")

# 5) explicit blowup check at N=256
hs = HeleShaw(HeleShawParams(n=256))
fields = hs.initial_fields(np.random.default_rng(7))
lam = np.zeros(256)
t = 0.0
for step in range(1, 201):
    try:
        fields, E = richardson_step(fields, t, hs.rhs, lam, hs.grid, hs.params.dt)
        t += hs.params.dt
    except (BlowUpError, ProximityError) as exc:
        print(f"explicit ended at step {step}: {type(exc).__name__}")
        break
else:
    print("explicit survived 200 steps?!")
