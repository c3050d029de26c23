import logging

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import QuadratureError
from weingarten.natural.pairs import NaturalGauge, WeingartenPair

logger = logging.getLogger(__name__)

QUAD_LIMIT = 200
TABLE_NODES = 257


def _integrand_f(pair: WeingartenPair):
    return lambda nu: float(pair.df(nu) / (pair.f(nu) - pair.g(nu)))


def _integrand_g(pair: WeingartenPair):
    return lambda nu: float(pair.dg(nu) / (pair.g(nu) - pair.f(nu)))


def _quad(integrand, lo: float, hi: float, tol: float) -> float:
    result = quad(integrand, lo, hi, epsabs=tol, epsrel=0.0, limit=QUAD_LIMIT, full_output=1)
    value, error = result[0], result[1]
    if len(result) > 3 or error > tol:
        message = result[3] if len(result) > 3 else "оценка погрешности превышает допуск"
        raise QuadratureError(
            f"Квадратура на [{lo:.6g}, {hi:.6g}] не достигла точности {tol:.1e}: {message} (оценка {error:.2e})"
        )
    return value


def natural_integrals(pair: WeingartenPair, nu0: float, nu: float, tol: float = DEFAULT_TOLERANCES.quadrature):
    """
    Интегралы If = int_{nu0}^{nu} f'/(f-g), Ig = int_{nu0}^{nu} g'/(g-f).

    Если у пары есть первообразные, используются они.

    :param pair: Пара Вайнгартена.
    :param nu0: Нижний предел.
    :param nu: Верхний предел.
    :param tol: Абсолютная точность квадратуры.
    :return: (If, Ig).
    :raises DomainError: Если пределы вне интервала пары.
    :raises QuadratureError: Если точность не достигнута.
    """
    pair.require(nu0, "nu0")
    pair.require(nu, "nu")
    nu0, nu = float(nu0), float(nu)
    if nu == nu0:
        return 0.0, 0.0
    if pair.f_antiderivative is not None and pair.g_antiderivative is not None:
        return (
            float(pair.f_antiderivative(nu) - pair.f_antiderivative(nu0)),
            float(pair.g_antiderivative(nu) - pair.g_antiderivative(nu0)),
        )
    return _quad(_integrand_f(pair), nu0, nu, tol), _quad(_integrand_g(pair), nu0, nu, tol)


def natural_metric(pair: WeingartenPair, gauge: NaturalGauge, nu: float, tol: float = DEFAULT_TOLERANCES.quadrature):
    """
    Метрика в натуральных главных параметрах:
    E = a^-2 exp(-2 If), G = b^-2 exp(-2 Ig).

    :return: (E, G).
    """
    i_f, i_g = natural_integrals(pair, gauge.nu0, nu, tol)
    return gauge.a_frak**-2 * np.exp(-2.0 * i_f), gauge.b_frak**-2 * np.exp(-2.0 * i_g)


class IntegralTable:
    """
    Интегралы If, Ig как функции nu на отрезке, для полей значений nu.

    Без первообразных отрезок разбивается на узлы (включая nu0),
    интегралы по частичным отрезкам считаются квадратурой и
    интерполируются кубическим сплайном.
    """

    def __init__(self, pair: WeingartenPair, nu0: float, lo: float, hi: float,
                 tol: float = DEFAULT_TOLERANCES.quadrature, nodes: int = TABLE_NODES):
        """
        :param pair: Пара Вайнгартена.
        :param nu0: Базовое значение.
        :param lo: Нижняя граница значений nu поля.
        :param hi: Верхняя граница значений nu поля.
        """
        self.pair = pair
        self.nu0 = float(nu0)
        lo, hi = min(lo, nu0), max(hi, nu0)
        pair.require([lo, hi], "поле nu")
        self._analytic = pair.f_antiderivative is not None and pair.g_antiderivative is not None
        self._splines = None
        if self._analytic or hi == lo:
            return
        grid = np.union1d(np.linspace(lo, hi, nodes), [self.nu0])
        f_integrand, g_integrand = _integrand_f(pair), _integrand_g(pair)
        segment_tol = tol / len(grid)
        f_parts = [_quad(f_integrand, a, b, segment_tol) for a, b in zip(grid[:-1], grid[1:])]
        g_parts = [_quad(g_integrand, a, b, segment_tol) for a, b in zip(grid[:-1], grid[1:])]
        f_cum = np.concatenate([[0.0], np.cumsum(f_parts)])
        g_cum = np.concatenate([[0.0], np.cumsum(g_parts)])
        base = int(np.searchsorted(grid, self.nu0))
        self._splines = (CubicSpline(grid, f_cum - f_cum[base]), CubicSpline(grid, g_cum - g_cum[base]))
        logger.debug(f"Таблица интегралов: {len(grid)} узлов на [{lo:.6g}, {hi:.6g}]")

    @classmethod
    def for_values(cls, pair: WeingartenPair, nu0: float, values, tol: float = DEFAULT_TOLERANCES.quadrature):
        values = np.asarray(values, dtype=float)
        return cls(pair, nu0, float(np.min(values)), float(np.max(values)), tol)

    def __call__(self, nu):
        """
        :param nu: Скаляр или массив значений.
        :return: (If, Ig) той же формы.
        """
        nu = np.asarray(nu, dtype=float)
        if self._analytic:
            return (
                self.pair.f_antiderivative(nu) - self.pair.f_antiderivative(self.nu0),
                self.pair.g_antiderivative(nu) - self.pair.g_antiderivative(self.nu0),
            )
        if self._splines is None:
            return np.zeros_like(nu), np.zeros_like(nu)
        return self._splines[0](nu), self._splines[1](nu)
