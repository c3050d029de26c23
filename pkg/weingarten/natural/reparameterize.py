import logging

import numpy as np
from scipy.integrate import cumulative_trapezoid
from scipy.interpolate import CubicSpline

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import FitError, MonotonicityError
from weingarten.geometry.fields import CurvatureField, FormField, ResidualField
from weingarten.geometry.grid import GridSpec, SurfaceGrid
from weingarten.natural.metric import IntegralTable
from weingarten.natural.pairs import NaturalGauge, WeingartenPair
from weingarten.utils.step_logger import step

logger = logging.getLogger(__name__)

BISECTION_STEPS = 100


def naturality_check(E, G, nu1, nu2) -> ResidualField:
    """
    Критерий натуральности: sqrt(EG)(nu1 - nu2) постоянно.

    :return: ResidualField с отклонением от среднего; relative_defect - дефект натуральности.
    """
    product = np.sqrt(np.asarray(E) * np.asarray(G)) * (np.asarray(nu1) - np.asarray(nu2))
    mean = float(np.mean(product))
    return ResidualField.from_values(product - mean, reference=mean)


def solve_nu(pair: WeingartenPair, cf: CurvatureField, tol_fit: float = DEFAULT_TOLERANCES.fit) -> np.ndarray:
    """
    Восстанавливает nu в узлах из nu2 = g(nu) бисекцией на интервале пары
    и проверяет nu1 = f(nu).

    :return: Массив nu формы сетки.
    :raises FitError: Если поверхность не соответствует паре.
    """
    target = cf.nu2
    lo = np.full(target.shape, pair.interval[0])
    hi = np.full(target.shape, pair.interval[1])
    g_lo, g_hi = float(pair.g(pair.interval[0])), float(pair.g(pair.interval[1]))
    increasing = g_hi > g_lo
    g_min, g_max = min(g_lo, g_hi), max(g_lo, g_hi)
    outside = (target < g_min) | (target > g_max)
    if np.any(outside):
        i, j = np.argwhere(outside)[0]
        raise FitError(
            f"nu2 = {target[i, j]:.6g} в узле ({i}, {j}) вне образа g(I) = [{g_min:.6g}, {g_max:.6g}]"
        )
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        below = (pair.g(mid) < target) == increasing
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    nu = 0.5 * (lo + hi)

    scale = max(float(np.max(np.abs(cf.nu1))), float(np.max(np.abs(cf.nu2))), 1e-300)
    mismatch = np.abs(cf.nu1 - pair.f(nu))
    # Односторонние разности на краю сетки дают O(h): проверяются внутренние узлы.
    if min(mismatch.shape) > 2:
        edge = np.ones(mismatch.shape, dtype=bool)
        edge[1:-1, 1:-1] = False
        mismatch = np.where(edge, 0.0, mismatch)
    worst = float(np.max(mismatch))
    if worst > tol_fit * scale:
        i, j = np.unravel_index(int(np.argmax(mismatch)), mismatch.shape)
        raise FitError(
            f"Поверхность не является W-поверхностью пары '{pair.kind}': |nu1 - f(nu)| = {worst:.3e} "
            f"в узле ({i}, {j}) при допуске {tol_fit * scale:.3e}"
        )
    return nu


def natural_functions(forms: FormField, cf: CurvatureField, pair: WeingartenPair, nu0: float = None,
                      tol_fit: float = DEFAULT_TOLERANCES.fit):
    """
    Функции lambda = sqrt(E) e^{If}, mu = sqrt(G) e^{Ig}.

    В главных параметрах W-поверхности lambda зависит только от u, mu только от v.

    :return: (lambda, mu, max относительного изменения lambda по v, то же для mu по u).
    """
    nu = solve_nu(pair, cf, tol_fit)
    nu0 = _default_nu0(pair, nu) if nu0 is None else nu0
    i_f, i_g = IntegralTable.for_values(pair, nu0, nu)(nu)
    lam = np.sqrt(forms.E) * np.exp(i_f)
    mu = np.sqrt(forms.G) * np.exp(i_g)
    lam_spread = float(np.max(np.ptp(lam, axis=1) / np.mean(lam, axis=1)))
    mu_spread = float(np.max(np.ptp(mu, axis=0) / np.mean(mu, axis=0)))
    return lam, mu, lam_spread, mu_spread


def _default_nu0(pair: WeingartenPair, nu: np.ndarray) -> float:
    mid = 0.5 * (float(np.min(nu)) + float(np.max(nu)))
    return float(np.clip(mid, *pair.interval))


def _line_parameter(density: np.ndarray, step_size: float, axis: int, scale: float, name: str) -> np.ndarray:
    cumulative = scale * cumulative_trapezoid(density, dx=step_size, axis=axis, initial=0.0)
    line = np.mean(cumulative, axis=1 - axis)
    if not np.all(np.diff(line) > 0):
        k = int(np.argmin(np.diff(line)))
        raise MonotonicityError(f"Параметр {name} не возрастает строго монотонно возле узла {k}")
    return line


@step("Переводим поверхность в натуральные главные параметры")
def reparameterize_to_natural(grid: SurfaceGrid, forms: FormField, cf: CurvatureField, pair: WeingartenPair,
                              a: float = 1.0, b: float = 1.0, tol_fit: float = DEFAULT_TOLERANCES.fit):
    """
    Переход к натуральным главным параметрам:
    u_bar(u) = a int sqrt(E) e^{If} du, v_bar(v) = b int sqrt(G) e^{Ig} dv,
    с передискретизацией поверхности кубическими сплайнами на равномерную сетку (u_bar, v_bar).

    :param grid: Поверхность в главных параметрах.
    :param forms: Её квадратичные формы.
    :param cf: Её поле кривизн.
    :param pair: Пара Вайнгартена поверхности.
    :param a: Константа нормировки по u.
    :param b: Константа нормировки по v.
    :return: (SurfaceGrid в натуральных параметрах, NaturalGauge).
    :raises FitError: Если поверхность не соответствует паре.
    :raises MonotonicityError: Если новые параметры не монотонны.
    """
    nu = solve_nu(pair, cf, tol_fit)
    nu0 = _default_nu0(pair, nu)
    i_f, i_g = IntegralTable.for_values(pair, nu0, nu)(nu)
    spec = grid.spec
    u_bar = _line_parameter(np.sqrt(forms.E) * np.exp(i_f), spec.du, 0, a, "u")
    v_bar = _line_parameter(np.sqrt(forms.G) * np.exp(i_g), spec.dv, 1, b, "v")

    u_bar_new = np.linspace(0.0, u_bar[-1], spec.nu)
    v_bar_new = np.linspace(0.0, v_bar[-1], spec.nv)
    u_of_bar = CubicSpline(u_bar, spec.u)(u_bar_new)
    v_of_bar = CubicSpline(v_bar, spec.v)(v_bar_new)
    along_u = CubicSpline(spec.u, grid.points, axis=0)(u_of_bar)
    points = CubicSpline(spec.v, along_u, axis=1)(v_of_bar)

    new_spec = GridSpec(nu=spec.nu, nv=spec.nv, u0=0.0, v0=0.0,
                        du=u_bar_new[1] - u_bar_new[0], dv=v_bar_new[1] - v_bar_new[0])
    gauge = NaturalGauge(a_frak=a, b_frak=b, nu0=nu0)
    logger.info(f"Натуральные параметры: u_bar in [0, {u_bar[-1]:.6g}], v_bar in [0, {v_bar[-1]:.6g}], nu0 = {nu0:.6g}")
    return SurfaceGrid(spec=new_spec, points=points), gauge
