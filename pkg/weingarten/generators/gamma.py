import logging
import math

import numpy as np
from scipy.interpolate import CubicSpline

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import InvariantCheckError, SmoothnessError, UsageError
from weingarten.generators.curves import MeridianSpec, SpaceCurveSpec, meridian_from_curvature
from weingarten.geometry.curvature import analyze_surface
from weingarten.geometry.grid import GridSpec, SurfaceGrid
from weingarten.utils.frames import orthonormalize, rk4_step
from weingarten.utils.step_logger import step

logger = logging.getLogger(__name__)

SMOOTHNESS_GUARD = 1e-8


def _fine_nodes(end: float, step_size: float) -> np.ndarray:
    count = max(int(math.ceil(end / step_size)), 1) + 1
    return np.linspace(0.0, end, count)


def curve_frames(c2: SpaceCurveSpec, v: np.ndarray, ode_step: float = DEFAULT_TOLERANCES.ode_step):
    """
    Интегрирует x' = t, t' = kappa cos(theta) y1 - kappa sin(theta) y2, y1' = -kappa cos(theta) t,
    y2' = kappa sin(theta) t, theta' = -tau методом РК4 с переортогонализацией репера.

    :param c2: Кривая.
    :param v: Узлы (v >= 0), в которых нужен результат.
    :return: (x, t, y1, y2, theta) - массивы формы (len(v), 3) и (len(v),).
    """
    v = np.asarray(v, dtype=float)
    if np.any(v < 0):
        raise UsageError("Параметр кривой v должен быть неотрицательным")
    nodes = _fine_nodes(float(v[-1]), ode_step)

    def rhs(s, state):
        kappa, tau = float(c2.kappa(s)), float(c2.tau(s))
        t, y1, y2, theta = state[3:6], state[6:9], state[9:12], state[12]
        c, sn = math.cos(theta), math.sin(theta)
        return np.concatenate([t, kappa * (c * y1 - sn * y2), -kappa * c * t, kappa * sn * t, [-tau]])

    frame0 = c2.frame0
    state = np.concatenate([np.asarray(c2.x0, dtype=float), frame0[0], frame0[1], frame0[2], [0.0]])
    states = [state]
    for k in range(len(nodes) - 1):
        state = rk4_step(rhs, nodes[k], state, nodes[k + 1] - nodes[k])
        # Репер (t, y1, y2) правый: y2 = t x y1.
        frame = orthonormalize(np.vstack([state[3:6], state[6:9], state[9:12]]))
        state = np.concatenate([state[:3], frame.ravel(), state[12:]])
        states.append(state)
    sampled = CubicSpline(nodes, np.asarray(states), axis=0)(v)
    frames = orthonormalize(np.stack([sampled[:, 3:6], sampled[:, 6:9], sampled[:, 9:12]], axis=1))
    return sampled[:, :3], frames[:, 0], frames[:, 1], frames[:, 2], sampled[:, 12]


def meridian_on(m: MeridianSpec, u: np.ndarray, ode_step: float = DEFAULT_TOLERANCES.ode_step):
    """(lambda, mu, phi) плоской кривой в узлах u >= 0."""
    u = np.asarray(u, dtype=float)
    if np.any(u < 0):
        raise UsageError("Натуральный параметр меридиана s1 должен быть неотрицательным")
    meridian = meridian_from_curvature(m, float(u[-1]), min(ode_step, float(u[-1])))
    values = CubicSpline(meridian.s, np.column_stack([meridian.lam, meridian.mu, meridian.phi]), axis=0)(u)
    return values[:, 0], values[:, 1], values[:, 2]


def _smoothness_factor(c2, v, lam, mu, theta):
    kappa = np.asarray(c2.kappa(v), dtype=float)
    return 1.0 - kappa[None, :] * (lam[:, None] * np.cos(theta)[None, :] - mu[:, None] * np.sin(theta)[None, :])


def _invariants(c2: SpaceCurveSpec, m: MeridianSpec, spec: GridSpec, theta, lam, mu, phi) -> dict:
    factor = _smoothness_factor(c2, spec.v, lam, mu, theta)
    kappa = np.asarray(c2.kappa(spec.v), dtype=float)[None, :]
    lam_dot, mu_dot = np.sin(phi)[:, None], np.cos(phi)[:, None]
    sin_t, cos_t = np.sin(theta)[None, :], np.cos(theta)[None, :]
    nu1 = np.broadcast_to(np.asarray(m.kappa1(spec.u), dtype=float)[:, None], factor.shape).copy()
    return {
        "nu1": nu1,
        "nu2": kappa * (lam_dot * sin_t + mu_dot * cos_t) / factor,
        "gamma1": np.zeros_like(factor),
        "gamma2": -kappa * (lam_dot * cos_t - mu_dot * sin_t) / factor,
        "kappa2_sq": kappa**2 / factor**2,
    }


def invariant_defect(grid: SurfaceGrid, invariants: dict) -> float:
    """
    Относительное расхождение K и H' поверхности с инвариантами во внутренних узлах.

    K и |H'| не зависят от выбора нормали и порядка главных кривизн.
    """
    _, cf, _ = analyze_surface(grid, check_umbilics=False)
    core = (slice(1, -1), slice(1, -1))
    nu1, nu2 = invariants["nu1"][core], invariants["nu2"][core]
    scale = max(float(np.max(np.abs(nu1))), float(np.max(np.abs(nu2))), 1e-300)
    k_defect = float(np.max(np.abs(cf.K[core] - nu1 * nu2))) / scale**2
    h_defect = float(np.max(np.abs(np.abs(cf.Hprime[core]) - 0.5 * np.abs(nu1 - nu2)))) / scale
    return max(k_defect, h_defect)


@step("Строим поверхность класса Gamma")
def gamma_surface(c2: SpaceCurveSpec, m: MeridianSpec, spec: GridSpec,
                  ode_step: float = DEFAULT_TOLERANCES.ode_step, guard: float = SMOOTHNESS_GUARD,
                  tol_check: float = DEFAULT_TOLERANCES.generator_check) -> SurfaceGrid:
    """
    Поверхность Z(s1, v) = x(v) + lambda(s1) y1(v) + mu(s1) y2(v); первый параметр сетки - s1.

    Кривизны результата сверяются с gamma_invariants.

    :param c2: Направляющая кривая.
    :param m: Кривизна меридиана.
    :param spec: Сетка (s1, v), u0 >= 0, v0 >= 0.
    :param tol_check: Допуск относительного расхождения с инвариантами.
    :return: SurfaceGrid.
    :raises SmoothnessError: Если 1 - kappa (lambda cos(theta) - mu sin(theta)) обращается в ноль.
    :raises InvariantCheckError: Если кривизны поверхности не совпадают с инвариантами.
    """
    x, _, y1, y2, theta = curve_frames(c2, spec.v, ode_step)
    lam, mu, phi = meridian_on(m, spec.u, ode_step)
    factor = _smoothness_factor(c2, spec.v, lam, mu, theta)
    singular = np.abs(factor) <= guard
    if np.any(singular):
        i, j = np.argwhere(singular)[0]
        raise SmoothnessError(
            f"Поверхность не гладкая в {int(singular.sum())} узлах, первый ({i}, {j}): "
            f"lambda cos(theta) - mu sin(theta) = 1/kappa"
        )
    points = x[None, :, :] + lam[:, None, None] * y1[None, :, :] + mu[:, None, None] * y2[None, :, :]
    grid = SurfaceGrid(spec=spec, points=points)
    defect = invariant_defect(grid, _invariants(c2, m, spec, theta, lam, mu, phi))
    if defect > tol_check:
        raise InvariantCheckError(
            f"Кривизны поверхности класса Gamma расходятся с инвариантами: {defect:.3e} при допуске {tol_check:.3e}"
        )
    logger.debug(f"Расхождение с инвариантами класса Gamma: {defect:.3e}")
    return grid


def gamma_invariants(c2: SpaceCurveSpec, m: MeridianSpec, spec: GridSpec,
                     ode_step: float = DEFAULT_TOLERANCES.ode_step) -> dict:
    """
    Инварианты поверхности класса Gamma в узлах сетки при ориентации nu1 = kappa1 > 0:
    nu2 = kappa (lambda' sin(theta) + mu' cos(theta)) / w,
    gamma2 = -kappa (lambda' cos(theta) - mu' sin(theta)) / w,
    kappa2^2 = kappa^2 / w^2, где w = 1 - kappa (lambda cos(theta) - mu sin(theta)); gamma1 = 0.

    :return: Словарь с ключами nu1, nu2, gamma1, gamma2, kappa2_sq.
    """
    _, _, _, _, theta = curve_frames(c2, spec.v, ode_step)
    lam, mu, phi = meridian_on(m, spec.u, ode_step)
    return _invariants(c2, m, spec, theta, lam, mu, phi)
