"""
Вращательные W-поверхности: натуральное ОДУ классов H = beta H', ОДУ кривизны меридиана
и меридиан дробно-линейного соотношения.

Ось вращения - Ox3; первый параметр сетки - меридиан, второй - угол поворота.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import cumulative_trapezoid, solve_ivp
from scipy.interpolate import CubicSpline

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import InvariantCheckError, RangeError, UsageError
from weingarten.generators.curves import MeridianSpec
from weingarten.geometry.curvature import analyze_surface
from weingarten.geometry.grid import GridSpec, SurfaceGrid
from weingarten.linear.relation import LinearRelation, moebius_from_relation
from weingarten.utils.frames import rk4_step
from weingarten.utils.step_logger import step

logger = logging.getLogger(__name__)

BLOW_UP = 1e12
MIN_RADIUS = 1e-6
START_CANDIDATES = (1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 0.25, -0.25, 0.1, -0.1)


def natural_ode_coefficient(beta: float) -> float:
    """c в (nu^beta)'' = c nu: c = -2 beta (beta + 1) / (beta - 1)^2."""
    return -2.0 * beta * (beta + 1.0) / (beta - 1.0) ** 2


@dataclass(frozen=True)
class RotationalProfile:
    """
    Решение натурального ОДУ: nu(u) > 0, w = nu^beta и первый интеграл
    1/2 w'^2 - c beta/(beta + 1) w^((beta + 1)/beta) в каждом узле.
    """

    beta: float
    u: np.ndarray
    nu: np.ndarray
    w: np.ndarray
    w_prime: np.ndarray
    first_integral: np.ndarray
    truncated: bool = False

    @property
    def u_max(self) -> float:
        return float(self.u[-1])

    @property
    def drift(self) -> float:
        return float(np.max(np.abs(self.first_integral - self.first_integral[0])))


def _reject_beta(beta: float) -> None:
    if beta in (0.0, 1.0, -1.0):
        raise UsageError(f"beta не может быть 0 или +-1, получено {beta}")


def rotational_natural_ode(beta: float, nu0: float, nu_prime0: float, u_max: float,
                           du: float = DEFAULT_TOLERANCES.ode_step, strict: bool = True) -> RotationalProfile:
    """
    Интегрирует w'' = c w^(1/beta), w = nu^beta методом РК4 и возвращает nu = w^(1/beta).

    :param beta: Параметр класса H = beta H' (beta != 0, +-1).
    :param nu0: nu(0) > 0.
    :param nu_prime0: nu'(0).
    :param u_max: Конец отрезка интегрирования.
    :param du: Шаг.
    :param strict: Бросать RangeError при выходе nu из области; иначе вернуть усечённый профиль.
    :return: RotationalProfile.
    :raises RangeError: Если nu -> 0 или решение неограниченно растёт до u_max.
    """
    _reject_beta(beta)
    if nu0 <= 0:
        raise UsageError(f"Нужно nu(0) > 0, получено {nu0}")
    if du <= 0 or u_max <= 0:
        raise UsageError(f"Нужны положительные u_max и du, получено {u_max}, {du}")
    c = natural_ode_coefficient(beta)
    power = (beta + 1.0) / beta

    def rhs(u, state):
        return np.array([state[1], c * state[0] ** (1.0 / beta)])

    count = int(round(u_max / du))
    states = [np.array([nu0**beta, beta * nu0 ** (beta - 1.0) * nu_prime0])]
    truncated = False
    for k in range(count):
        state = rk4_step(rhs, k * du, states[-1], du)
        if not np.all(np.isfinite(state)) or state[0] <= 0.0 or abs(state[0]) > BLOW_UP:
            truncated = True
            break
        states.append(state)
    if truncated:
        message = f"Решение натурального ОДУ (beta = {beta:g}) покинуло область nu > 0 при u = {len(states) * du:.6g}"
        if strict:
            raise RangeError(message)
        logger.warning(message)
    states = np.asarray(states)
    w, w_prime = states[:, 0], states[:, 1]
    u = du * np.arange(len(states))
    return RotationalProfile(
        beta=beta, u=u, nu=w ** (1.0 / beta), w=w, w_prime=w_prime,
        first_integral=0.5 * w_prime**2 - c * beta / (beta + 1.0) * w**power,
        truncated=truncated,
    )


@dataclass(frozen=True)
class MeridianCurvature:
    """Решение kappa1'' = -2 kappa1^3 / (beta + 1) с первым интегралом kappa1'^2 + kappa1^4/(beta + 1)."""

    beta: float
    s: np.ndarray
    kappa: np.ndarray
    kappa_prime: np.ndarray

    @property
    def first_integral(self) -> np.ndarray:
        return self.kappa_prime**2 + self.kappa**4 / (self.beta + 1.0)

    @property
    def drift(self) -> float:
        values = self.first_integral
        return float(np.max(np.abs(values - values[0])))

    def spec(self) -> MeridianSpec:
        return MeridianSpec.from_samples(self.s, self.kappa)


def meridian_curvature_ode(beta: float, kappa0: float, kappa_prime0: float, s1_max: float,
                           ds: float = DEFAULT_TOLERANCES.ode_step) -> MeridianCurvature:
    """
    Кривизна меридиана вращательной поверхности класса H = beta H' (метод РК4).

    :raises UsageError: Если beta = -1 или шаг не положителен.
    """
    if beta == -1.0:
        raise UsageError("ОДУ кривизны меридиана не определено при beta = -1")
    if ds <= 0 or s1_max <= 0:
        raise UsageError(f"Нужны положительные s1_max и ds, получено {s1_max}, {ds}")
    factor = 2.0 / (beta + 1.0)

    def rhs(s, state):
        return np.array([state[1], -factor * state[0] ** 3])

    count = int(round(s1_max / ds))
    states = np.empty((count + 1, 2))
    states[0] = (kappa0, kappa_prime0)
    for k in range(count):
        states[k + 1] = rk4_step(rhs, k * ds, states[k], ds)
    return MeridianCurvature(beta=beta, s=ds * np.arange(count + 1), kappa=states[:, 0], kappa_prime=states[:, 1])


@step("Строим вращательную поверхность класса H = beta H'")
def rotational_basic45(beta: float, profile: RotationalProfile, spec: GridSpec,
                      tol_check: float = DEFAULT_TOLERANCES.generator_check) -> SurfaceGrid:
    """
    Поверхность вращения по решению натурального ОДУ:
    phi = (beta + 1)/(beta - 1) int nu^((1 - beta)/2), lambda = int nu^(-(1 + beta)/2) sin(phi),
    mu = int nu^(-(1 + beta)/2) cos(phi); точка ((1 - lambda) cos v, (1 - lambda) sin v, mu).

    Главные кривизны получившейся поверхности: nu1 = (beta + 1)/(beta - 1) nu, nu2 = nu
    при nu(0) = 1, nu'(0) = 0.

    :param beta: Параметр класса.
    :param profile: Решение rotational_natural_ode, начинающееся в u = 0.
    :param spec: Сетка (u, v); узлы u внутри [0, profile.u_max].
    :param tol_check: Допуск относительного расхождения H^2/K с beta^2/(beta^2 - 1).
    :return: SurfaceGrid.
    :raises RangeError: Если сетка выходит за пределы профиля или nu <= 0.
    :raises InvariantCheckError: Если отношение главных кривизн не совпадает с (beta + 1)/(beta - 1).
    """
    _reject_beta(beta)
    if profile.beta != beta:
        raise UsageError(f"Профиль построен для beta = {profile.beta:g}, а не {beta:g}")
    if spec.u[0] < 0 or spec.u[-1] > profile.u_max + 1e-12:
        raise RangeError(
            f"Сетка по u [{spec.u[0]:.6g}, {spec.u[-1]:.6g}] выходит за профиль [0, {profile.u_max:.6g}]"
        )
    nu = profile.nu
    if np.any(nu <= 0):
        raise RangeError("Профиль содержит nu <= 0")
    phi = (beta + 1.0) / (beta - 1.0) * cumulative_trapezoid(nu ** ((1.0 - beta) / 2.0), profile.u, initial=0.0)
    speed = nu ** (-(1.0 + beta) / 2.0)
    lam = cumulative_trapezoid(speed * np.sin(phi), profile.u, initial=0.0)
    mu = cumulative_trapezoid(speed * np.cos(phi), profile.u, initial=0.0)
    meridian = CubicSpline(profile.u, np.column_stack([lam, mu]), axis=0)(spec.u)
    radius = 1.0 - meridian[:, 0]

    def parameterization(uu, vv):
        index = np.rint((uu - spec.u0) / spec.du).astype(int)
        return radius[index] * np.cos(vv), radius[index] * np.sin(vv), meridian[index, 1]

    grid = SurfaceGrid.from_function(parameterization, spec)
    defect = ratio_defect(grid, beta)
    if defect > tol_check:
        raise InvariantCheckError(
            f"Отношение главных кривизн не равно (beta + 1)/(beta - 1) при beta = {beta:g}: "
            f"расхождение {defect:.3e} при допуске {tol_check:.3e}"
        )
    logger.debug(f"Расхождение H^2/K с beta^2/(beta^2 - 1): {defect:.3e}")
    return grid


def ratio_defect(grid: SurfaceGrid, beta: float) -> float:
    """
    Относительное расхождение H^2/K с beta^2/(beta^2 - 1) во внутренних узлах.

    Равенство эквивалентно nu1/nu2 = (beta + 1)/(beta - 1) при любом выборе нормали.
    """
    _, cf, _ = analyze_surface(grid, check_umbilics=False)
    core = (slice(1, -1), slice(1, -1))
    expected = beta**2 / (beta**2 - 1.0)
    return float(np.max(np.abs(cf.H[core] ** 2 / cf.K[core] - expected))) / abs(expected)


def _start_curvature(function) -> float:
    for nu2 in START_CANDIDATES:
        with np.errstate(divide="ignore", invalid="ignore"):
            nu1 = float(function(nu2))
        if math.isfinite(nu1) and nu1 - nu2 > 0:
            return nu2
    raise RangeError("Не найдено начальное значение nu2 с конечным nu1 > nu2")


@step("Строим вращательную поверхность дробно-линейного соотношения")
def rotational_from_relation(rel: LinearRelation, spec: GridSpec, nu2_start: float = None,
                             rtol: float = 1e-10, atol: float = 1e-12) -> SurfaceGrid:
    """
    Вращательная поверхность, у которой кривизна меридиана nu1 = F(nu2) - дробно-линейная функция
    кривизны параллели nu2 = cos(phi)/r.

    Меридиан (r(s), h(s)) в натуральном параметре: r' = -sin(phi), h' = cos(phi), phi' = F(cos(phi)/r).
    Начало: r0 = 1/|nu2|, phi0 = 0 при nu2 > 0 и phi0 = pi при nu2 < 0.

    :param rel: Соотношение delta K = alpha H + beta H' + gamma.
    :param spec: Сетка (s, v), s >= 0.
    :param nu2_start: Начальная кривизна параллели; по умолчанию подбирается.
    :return: SurfaceGrid.
    :raises RangeError: Если меридиан подходит к оси или F обращается в бесконечность.
    """
    if spec.u[0] < 0:
        raise UsageError("Натуральный параметр меридиана должен быть неотрицательным")
    moebius = moebius_from_relation(rel)
    nu2 = nu2_start if nu2_start is not None else _start_curvature(moebius)
    if nu2 == 0:
        raise UsageError("Начальная кривизна параллели должна быть ненулевой")
    state0 = [1.0 / abs(nu2), 0.0, 0.0 if nu2 > 0 else math.pi]
    logger.debug(f"Соотношение {rel}: nu2(0) = {nu2:g}, nu1(0) = {float(moebius(nu2)):g}")

    def rhs(s, state):
        r, _, phi = state
        nu1 = float(moebius(math.cos(phi) / r))
        if not math.isfinite(nu1) or abs(nu1) > BLOW_UP:
            raise RangeError(f"Кривизна меридиана не ограничена при s = {s:.6g}")
        return [-math.sin(phi), math.cos(phi), nu1]

    def near_axis(s, state):
        return state[0] - MIN_RADIUS

    near_axis.terminal = True
    s_end = float(spec.u[-1])
    solution = solve_ivp(rhs, (0.0, s_end), state0, method="DOP853", rtol=rtol, atol=atol,
                         dense_output=True, events=near_axis)
    if solution.status != 0 or solution.t[-1] < s_end:
        raise RangeError(f"Меридиан не продолжается до s = {s_end:.6g}: {solution.message}")
    r, h, _ = solution.sol(spec.u)

    def parameterization(uu, vv):
        index = np.rint((uu - spec.u0) / spec.du).astype(int)
        return r[index] * np.cos(vv), r[index] * np.sin(vv), h[index]

    return SurfaceGrid.from_function(parameterization, spec)
