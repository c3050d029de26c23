import numpy as np

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.geometry.fields import ResidualField
from weingarten.natural.metric import IntegralTable
from weingarten.natural.nu_field import NuField
from weingarten.natural.pairs import NaturalGauge, WeingartenPair
from weingarten.utils.finite_differences import first_derivative, second_derivative


def _pair_values(pair: WeingartenPair, nu: np.ndarray):
    return pair.f(nu), pair.g(nu), pair.df(nu), pair.dg(nu), pair.d2f(nu), pair.d2g(nu)


def natural_pde_residual(pair: WeingartenPair, gauge: NaturalGauge, nu: NuField,
                         tol: float = DEFAULT_TOLERANCES.quadrature) -> ResidualField:
    """
    Невязка натурального уравнения поверхности Вайнгартена

        b^2 e^{2Ig} [f' nu_vv + (f'' - 2f'^2/(f-g)) nu_v^2]
      - a^2 e^{2If} [g' nu_uu + (g'' - 2g'^2/(g-f)) nu_u^2] - f g (f-g) = 0.

    :param pair: Пара Вайнгартена.
    :param gauge: Нормировка натуральных параметров.
    :param nu: Поле nu.
    :return: ResidualField.
    :raises DomainError: Если значения nu вне интервала пары.
    """
    values = nu.values
    pair.require(values)
    gauge.check(pair)
    i_f, i_g = IntegralTable.for_values(pair, gauge.nu0, values, tol)(values)
    f, g, df, dg, d2f, d2g = _pair_values(pair, values)
    nu_u, nu_v, nu_uu, nu_vv = nu.derivatives()
    v_part = gauge.b_frak**2 * np.exp(2.0 * i_g) * (df * nu_vv + (d2f - 2.0 * df**2 / (f - g)) * nu_v**2)
    u_part = gauge.a_frak**2 * np.exp(2.0 * i_f) * (dg * nu_uu + (d2g - 2.0 * dg**2 / (g - f)) * nu_u**2)
    return ResidualField.from_values(v_part - u_part - f * g * (f - g))


def natural_ode_residual(pair: WeingartenPair, gauge: NaturalGauge, nu_u: np.ndarray, du: float,
                         tol: float = DEFAULT_TOLERANCES.quadrature) -> ResidualField:
    """
    Невязка натурального уравнения для вращательных поверхностей, nu = nu(u):
    -a^2 e^{2If} [g' nu'' + (g'' - 2g'^2/(g-f)) nu'^2] - f g (f-g).
    """
    values = np.asarray(nu_u, dtype=float)
    pair.require(values)
    i_f, _ = IntegralTable.for_values(pair, gauge.nu0, values, tol)(values)
    f, g, _, dg, _, d2g = _pair_values(pair, values)
    d1 = first_derivative(values, du, 0)
    d2 = second_derivative(values, du, 0)
    u_part = gauge.a_frak**2 * np.exp(2.0 * i_f) * (dg * d2 + (d2g - 2.0 * dg**2 / (g - f)) * d1**2)
    return ResidualField.from_values(-u_part - f * g * (f - g))


def natural_geodesic_curvatures(pair: WeingartenPair, gauge: NaturalGauge, nu: NuField,
                         tol: float = DEFAULT_TOLERANCES.quadrature):
    """
    Главные геодезические кривизны поверхности, заданной решением натурального уравнения:
    gamma1 = e^{Ig} b f' nu_v / (f-g), gamma2 = -e^{If} a g' nu_u / (g-f).

    :return: (gamma1, gamma2) массивы формы сетки.
    """
    values = nu.values
    pair.require(values)
    i_f, i_g = IntegralTable.for_values(pair, gauge.nu0, values, tol)(values)
    f, g, df, dg = pair.f(values), pair.g(values), pair.df(values), pair.dg(values)
    nu_u, nu_v, _, _ = nu.derivatives()
    gamma1 = np.exp(i_g) * gauge.b_frak * df * nu_v / (f - g)
    gamma2 = -np.exp(i_f) * gauge.a_frak * dg * nu_u / (g - f)
    return gamma1, gamma2


def natural_metric_field(pair: WeingartenPair, gauge: NaturalGauge, nu: NuField,
                         tol: float = DEFAULT_TOLERANCES.quadrature):
    """Поля E, G по формулам натуральной метрики."""
    values = nu.values
    pair.require(values)
    i_f, i_g = IntegralTable.for_values(pair, gauge.nu0, values, tol)(values)
    return gauge.a_frak**-2 * np.exp(-2.0 * i_f), gauge.b_frak**-2 * np.exp(-2.0 * i_g)
