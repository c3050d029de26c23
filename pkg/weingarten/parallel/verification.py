import logging

import numpy as np

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import NumericalError, SingularOffsetError
from weingarten.natural.metric import natural_metric
from weingarten.natural.nu_field import NuField
from weingarten.natural.pairs import NaturalGauge, WeingartenPair
from weingarten.natural.pde import natural_pde_residual
from weingarten.parallel.offset import _require_nonzero

logger = logging.getLogger(__name__)


def _offset_sign_on_interval(pair: WeingartenPair, a: float, samples: int, guard: float) -> int:
    nu = pair.samples(samples)
    factor_f = 1.0 - a * pair.f(nu)
    factor_g = 1.0 - a * pair.g(nu)
    if np.min(np.abs(factor_f)) <= guard or np.min(np.abs(factor_g)) <= guard:
        raise SingularOffsetError(f"1 - a f или 1 - a g обращается в ноль на интервале пары при a = {a:.6g}")
    signs = np.sign(factor_f * factor_g)
    if np.any(signs != signs[0]):
        raise SingularOffsetError(f"Знак (1 - a f)(1 - a g) меняется на интервале пары при a = {a:.6g}")
    return int(signs[0])


def parallel_weingarten_pair(pair: WeingartenPair, a: float, samples: int = DEFAULT_TOLERANCES.pair_samples,
                             guard: float = DEFAULT_TOLERANCES.offset_guard) -> WeingartenPair:
    """
    Функции Вайнгартена параллельной поверхности: f_bar = eps f/(1 - a f), g_bar = eps g/(1 - a g).

    :param pair: Исходная пара.
    :param a: Расстояние сдвига (ненулевое).
    :return: WeingartenPair на том же интервале.
    :raises SingularOffsetError: Если 1 - a f или 1 - a g обращается в ноль на интервале.
    """
    _require_nonzero(a)
    eps = _offset_sign_on_interval(pair, a, samples, guard)
    f, g, df, dg, d2f, d2g = pair.f, pair.g, pair.df, pair.dg, pair.d2f, pair.d2g

    def f_bar(nu):
        return eps * f(nu) / (1.0 - a * f(nu))

    def g_bar(nu):
        return eps * g(nu) / (1.0 - a * g(nu))

    def df_bar(nu):
        return eps * df(nu) / (1.0 - a * f(nu)) ** 2

    def dg_bar(nu):
        return eps * dg(nu) / (1.0 - a * g(nu)) ** 2

    def d2f_bar(nu):
        q = 1.0 - a * f(nu)
        return eps * (d2f(nu) * q + 2.0 * a * df(nu) ** 2) / q**3

    def d2g_bar(nu):
        q = 1.0 - a * g(nu)
        return eps * (d2g(nu) * q + 2.0 * a * dg(nu) ** 2) / q**3

    f_anti = g_anti = None
    if pair.f_antiderivative is not None and pair.g_antiderivative is not None:
        def f_anti(nu):
            return pair.f_antiderivative(nu) - np.log(np.abs(1.0 - a * f(nu)))

        def g_anti(nu):
            return pair.g_antiderivative(nu) - np.log(np.abs(1.0 - a * g(nu)))

    bar = WeingartenPair.build(
        f=f_bar, g=g_bar, df=df_bar, dg=dg_bar, d2f=d2f_bar, d2g=d2g_bar,
        interval=pair.interval, kind=f"parallel:{pair.kind}",
        params={"a": a, "epsilon": eps, "base": pair.params},
        f_antiderivative=f_anti, g_antiderivative=g_anti, samples=samples,
    )

    nu = pair.samples(samples)
    separation = f(nu) - g(nu)
    separation_bar = f_bar(nu) - g_bar(nu)
    if np.any(np.sign(separation_bar) != np.sign(separation)):
        raise NumericalError("Знак f - g не сохранился при параллельном сдвиге")
    return bar


def parallel_gauge(pair: WeingartenPair, gauge: NaturalGauge, a: float) -> NaturalGauge:
    """Нормировка параллельной поверхности: a_bar = a/|1 - a f0|, b_bar = b/|1 - a g0|."""
    f0 = float(pair.f(gauge.nu0))
    g0 = float(pair.g(gauge.nu0))
    return NaturalGauge(
        a_frak=gauge.a_frak / abs(1.0 - a * f0),
        b_frak=gauge.b_frak / abs(1.0 - a * g0),
        nu0=gauge.nu0,
    )


def verify_parallel_naturality(pair: WeingartenPair, gauge: NaturalGauge, a: float, nu_range=None,
                               samples: int = DEFAULT_TOLERANCES.pair_samples) -> float:
    """
    Проверяет, что натуральные параметры остаются натуральными для параллельной поверхности:
    sqrt(E_bar G_bar)(f_bar - g_bar) = const при E_bar = (1 - a f)^2 E, G_bar = (1 - a g)^2 G.

    :param nu_range: Отрезок значений nu (по умолчанию интервал пары).
    :return: Максимальное относительное отклонение от постоянства.
    """
    bar = parallel_weingarten_pair(pair, a, samples)
    lo, hi = nu_range if nu_range is not None else pair.interval
    values = []
    for nu in np.linspace(lo, hi, samples):
        E, G = natural_metric(pair, gauge, nu)
        E_bar = (1.0 - a * pair.f(nu)) ** 2 * E
        G_bar = (1.0 - a * pair.g(nu)) ** 2 * G
        values.append(np.sqrt(E_bar * G_bar) * (bar.f(nu) - bar.g(nu)))
    values = np.asarray(values, dtype=float)
    defect = float(np.max(np.abs(values - values[0])) / abs(values[0]))
    logger.info(f"Дефект натуральности параллельной поверхности a = {a:.6g}: {defect:.3e}")
    return defect


def verify_pde_invariance(pair: WeingartenPair, gauge: NaturalGauge, a: float, nu: NuField) -> float:
    """
    Сравнивает натуральные уравнения поверхности и её параллельной поверхности.

    Левая часть уравнения для (f_bar, g_bar) равна eps/((1 - a f)^2 (1 - a g)^2)
    от левой части исходного уравнения; возвращается относительное расхождение
    max|eps (1 - a f)^2 (1 - a g)^2 R_bar - R| / max(|R|, |f g (f - g)|).

    :raises SingularOffsetError: Если сдвиг сингулярен на интервале пары.
    """
    bar = parallel_weingarten_pair(pair, a)
    eps = bar.params["epsilon"]
    gauge_bar = parallel_gauge(pair, gauge, a)
    residual = natural_pde_residual(pair, gauge, nu).values
    residual_bar = natural_pde_residual(bar, gauge_bar, nu).values

    values = nu.values
    f, g = pair.f(values), pair.g(values)
    rescaled = eps * (1.0 - a * f) ** 2 * (1.0 - a * g) ** 2 * residual_bar
    scale = max(float(np.max(np.abs(residual))), float(np.max(np.abs(f * g * (f - g)))), 1e-300)
    difference = float(np.max(np.abs(rescaled - residual)[1:-1, 1:-1])) / scale
    logger.info(f"Расхождение натуральных уравнений при сдвиге a = {a:.6g}: {difference:.3e}")
    return difference
