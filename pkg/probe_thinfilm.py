"""Exploratory probe: thin-film closed loop, rupture timing, explicit blow-up."""
import sys
sys.path.insert(0, "src")
import numpy as np
from mars.models.thinfilm import ThinFilm, ThinFilmParams, H0
from mars.stepper import richardson_step, ein_step, linear_stability_factor
from mars.noise import noise_measure
from mars.controller import ControllerConfig, update_lambda, lambda_critical
from mars.errors import BlowUpError, RuptureError

# 1) scalar stability factor sanity
for s in (5, 50, 500):
    for rho in (0.6, 0.7):
        f = linear_stability_factor(1.0, rho, s)
        print(f"s={s:4d} rho={rho}: |factor|={abs(f):.5f}")

# 2) explicit run: steps to failure
model = ThinFilm(ThinFilmParams())
fields = model.initial_fields()
lam0 = np.zeros(model.grid.shape)
t = 0.0
dt = model.params.dt
fail = None
for step in range(1, 501):
    try:
        fields, E = richardson_step(fields, t, model.rhs, lam0, model.grid, dt)
        t += dt
    except (BlowUpError, RuptureError) as exc:
        fail = (step, type(exc).__name__, str(exc))
        break
print("explicit failure:", fail)

# 3) fixed lambda0*k^4 run: how far does it go? track h_min, h_max
model = ThinFilm(ThinFilmParams())
fields = model.initial_fields()
lam = model.lambda_init()
t = 0.0
last = None
for step in range(1, 10001):
    try:
        fields, E = richardson_step(fields, t, model.rhs, lam, model.grid, dt)
        t += dt
    except (BlowUpError, RuptureError) as exc:
        print(f"fixed-lambda run ended at step {step}, t={t:.5f}: {type(exc).__name__}: {exc}")
        break
    last = step
    if step % 500 == 0:
        print(f"  step {step:5d} t={t:.4f} h_min={fields[0].min():.4f} h_max={fields[0].max():.4f}")
else:
    print("fixed-lambda run completed 10000 steps")

# 4) adaptive run: track lambda vs lambda_c at a few modes
model = ThinFilm(ThinFilmParams())
fields = model.initial_fields()
lam = model.lambda_init()
cfg = ControllerConfig(epsilon_u=model.params.epsilon_u, zero_seed=2.0 / (3.0 * dt))
t = 0.0
for step in range(1, 10001):
    try:
        fields, Efields = richardson_step(fields, t, model.rhs, lam, model.grid, dt)
        t += dt
        eps = noise_measure(Efields[0])
        lam = update_lambda(lam, eps, cfg)
    except (BlowUpError, RuptureError) as exc:
        print(f"adaptive run ended at step {step}, t={t:.5f}: {type(exc).__name__}: {exc}")
        break
    if step % 250 == 0 or step == 2000:
        hbar = model.hbar(fields)
        k = np.arange(model.params.n // 2 + 1)
        lc = lambda_critical(model.e_theory(k, hbar))
        ke = model.ke(hbar)
        half = lam[: model.params.n // 2 + 1]
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(lc > 0, half / lc, np.nan)
        lo = int(np.ceil(ke + 1))
        hi = model.params.n // 3
        band = ratio[lo : hi + 1]
        below = ratio[1 : max(1, int(np.floor(ke - 1)))]
        print(
            f"  step {step:5d} t={t:.4f} h=[{fields[0].min():.3f},{fields[0].max():.3f}] "
            f"ke={ke:.2f} band k=[{lo},{hi}] lam/lc min={np.nanmin(band):.3f} "
            f"max={np.nanmax(band):.3f} low-k max ratio={np.nanmax(below) if len(below) else np.nan:.4f}"
        )
