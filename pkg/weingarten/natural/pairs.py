import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np
from scipy.interpolate import CubicSpline

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import DataIOError, DomainError, InvalidPairError, ParseError, UsageError

logger = logging.getLogger(__name__)

PAIR_KINDS = ("minimal", "cmc", "linear", "linear-fractional", "custom-table")

MIN_SEPARATION = 1e-10


@dataclass(frozen=True)
class WeingartenPair:
    """
    Функции Вайнгартена nu1 = f(nu), nu2 = g(nu) на интервале I.

    Все функции векторизованы по numpy. Необязательные первообразные
    f_antiderivative, g_antiderivative - это первообразные f'/(f-g) и g'/(g-f).
    """

    f: Callable
    g: Callable
    df: Callable
    dg: Callable
    d2f: Callable
    d2g: Callable
    interval: tuple
    kind: str = "custom"
    params: dict = field(default_factory=dict)
    f_antiderivative: Optional[Callable] = None
    g_antiderivative: Optional[Callable] = None

    @classmethod
    def build(cls, f, g, interval, df=None, dg=None, d2f=None, d2g=None, kind="custom", params=None,
              f_antiderivative=None, g_antiderivative=None, samples: int = DEFAULT_TOLERANCES.pair_samples):
        """
        Создаёт пару, при необходимости синтезируя производные центральными разностями
        с шагом 1e-5 * |I|, и проверяет её корректность.

        :param f: Функция nu1 = f(nu).
        :param g: Функция nu2 = g(nu).
        :param interval: (nu_min, nu_max).
        :return: WeingartenPair.
        :raises InvalidPairError: Если f - g или f'g' обращаются в ноль на I.
        """
        lo, hi = (float(x) for x in interval)
        if not hi > lo:
            raise InvalidPairError(f"Пустой интервал пары: [{lo}, {hi}]")
        h = 1e-5 * (hi - lo)
        df = df or _central_first(f, h)
        dg = dg or _central_first(g, h)
        d2f = d2f or _central_second(f, h)
        d2g = d2g or _central_second(g, h)
        pair = cls(
            f=f, g=g, df=df, dg=dg, d2f=d2f, d2g=d2g, interval=(lo, hi), kind=kind, params=dict(params or {}),
            f_antiderivative=f_antiderivative, g_antiderivative=g_antiderivative,
        )
        pair.validate(samples)
        return pair

    @property
    def width(self) -> float:
        return self.interval[1] - self.interval[0]

    def samples(self, count: int = DEFAULT_TOLERANCES.pair_samples) -> np.ndarray:
        return np.linspace(self.interval[0], self.interval[1], count)

    def validate(self, samples: int = DEFAULT_TOLERANCES.pair_samples) -> None:
        """
        Проверяет f - g != 0 и f'g' != 0 на равномерной выборке интервала.

        :raises InvalidPairError: При нарушении условий.
        """
        nu = self.samples(samples)
        separation = np.abs(self.f(nu) - self.g(nu))
        if not np.all(np.isfinite(separation)) or np.min(separation) <= MIN_SEPARATION:
            k = int(np.nanargmin(separation))
            raise InvalidPairError(f"f - g обращается в ноль на интервале: |f-g| = {separation[k]:.3e} при nu = {nu[k]:.6g}")
        product = self.df(nu) * self.dg(nu)
        if not np.all(np.isfinite(product)) or np.any(product == 0.0):
            k = int(np.nanargmin(np.abs(product)))
            raise InvalidPairError(f"f'g' обращается в ноль на интервале при nu = {nu[k]:.6g}")

    def contains(self, nu) -> bool:
        slack = 1e-12 * self.width
        nu = np.asarray(nu, dtype=float)
        return bool(np.all((nu >= self.interval[0] - slack) & (nu <= self.interval[1] + slack)))

    def require(self, nu, what: str = "nu") -> None:
        """
        :raises DomainError: Если значения вне интервала пары.
        """
        values = np.asarray(nu, dtype=float)
        if not self.contains(values):
            raise DomainError(
                f"{what} вне интервала пары [{self.interval[0]:.6g}, {self.interval[1]:.6g}]: "
                f"min={np.min(values):.6g}, max={np.max(values):.6g}"
            )

    def describe(self) -> dict:
        return {"kind": self.kind, "params": self.params, "interval": list(self.interval)}


@dataclass(frozen=True)
class NaturalGauge:
    """
    Нормировка натуральных главных параметров: константы a_frak, b_frak и базовое значение nu0.
    """

    a_frak: float = 1.0
    b_frak: float = 1.0
    nu0: float = 0.0

    def __post_init__(self):
        if not (self.a_frak > 0 and self.b_frak > 0):
            raise UsageError(f"Константы нормировки должны быть положительными: a={self.a_frak}, b={self.b_frak}")

    def check(self, pair: WeingartenPair) -> None:
        pair.require(self.nu0, "nu0")

    def describe(self) -> dict:
        return {"a_frak": self.a_frak, "b_frak": self.b_frak, "nu0": self.nu0}


def _central_first(func, h):
    def derivative(nu):
        return (func(nu + h) - func(nu - h)) / (2.0 * h)
    return derivative


def _central_second(func, h):
    def derivative(nu):
        return (func(nu + h) - 2.0 * func(nu) + func(nu - h)) / h**2
    return derivative


def minimal_pair(interval=(0.01, 10.0)) -> WeingartenPair:
    """Минимальные поверхности: f = nu, g = -nu."""
    return WeingartenPair.build(
        f=lambda nu: np.asarray(nu, dtype=float),
        g=lambda nu: -np.asarray(nu, dtype=float),
        df=lambda nu: np.ones_like(np.asarray(nu, dtype=float)),
        dg=lambda nu: -np.ones_like(np.asarray(nu, dtype=float)),
        d2f=lambda nu: np.zeros_like(np.asarray(nu, dtype=float)),
        d2g=lambda nu: np.zeros_like(np.asarray(nu, dtype=float)),
        interval=interval,
        kind="minimal",
        f_antiderivative=lambda nu: 0.5 * np.log(np.abs(nu)),
        g_antiderivative=lambda nu: 0.5 * np.log(np.abs(nu)),
    )


def cmc_pair(H: float = 0.5, interval=None) -> WeingartenPair:
    """Постоянная средняя кривизна H: f = 2H - nu, g = nu (nu < H)."""
    H = float(H)
    interval = interval or (H - 5.0, H - 0.01)
    return WeingartenPair.build(
        f=lambda nu: 2.0 * H - np.asarray(nu, dtype=float),
        g=lambda nu: np.asarray(nu, dtype=float),
        df=lambda nu: -np.ones_like(np.asarray(nu, dtype=float)),
        dg=lambda nu: np.ones_like(np.asarray(nu, dtype=float)),
        d2f=lambda nu: np.zeros_like(np.asarray(nu, dtype=float)),
        d2g=lambda nu: np.zeros_like(np.asarray(nu, dtype=float)),
        interval=interval,
        kind="cmc",
        params={"H": H},
        f_antiderivative=lambda nu: 0.5 * np.log(np.abs(H - nu)),
        g_antiderivative=lambda nu: 0.5 * np.log(np.abs(H - nu)),
    )


def moebius_pair(A: float, B: float, C: float, D: float, interval, kind: str = "linear-fractional",
                 params: dict = None) -> WeingartenPair:
    """
    Дробно-линейная пара: g = nu, f = (A nu + B) / (C nu + D).

    :raises InvalidPairError: Если BC - AD = 0 или знаменатель обращается в ноль на I.
    """
    det = A * D - B * C
    if det == 0.0:
        raise InvalidPairError("Вырожденные коэффициенты Мёбиуса: AD - BC = 0")
    lo, hi = interval
    if C != 0.0 and lo <= -D / C <= hi:
        raise InvalidPairError(f"Полюс f = -D/C = {-D / C:.6g} внутри интервала [{lo}, {hi}]")

    def denominator(nu):
        return C * np.asarray(nu, dtype=float) + D

    return WeingartenPair.build(
        f=lambda nu: (A * np.asarray(nu, dtype=float) + B) / denominator(nu),
        g=lambda nu: np.asarray(nu, dtype=float),
        df=lambda nu: det / denominator(nu) ** 2,
        dg=lambda nu: np.ones_like(np.asarray(nu, dtype=float)),
        d2f=lambda nu: -2.0 * C * det / denominator(nu) ** 3,
        d2g=lambda nu: np.zeros_like(np.asarray(nu, dtype=float)),
        interval=interval,
        kind=kind,
        params=params or {"A": A, "B": B, "C": C, "D": D},
    )


def table_pair(nu, f_values, g_values) -> WeingartenPair:
    """Пара, заданная таблицей: кубические сплайны по точкам (nu, f, g)."""
    nu = np.asarray(nu, dtype=float)
    order = np.argsort(nu)
    nu = nu[order]
    f_spline = CubicSpline(nu, np.asarray(f_values, dtype=float)[order])
    g_spline = CubicSpline(nu, np.asarray(g_values, dtype=float)[order])
    return WeingartenPair.build(
        f=f_spline, g=g_spline,
        df=f_spline.derivative(1), dg=g_spline.derivative(1),
        d2f=f_spline.derivative(2), d2g=g_spline.derivative(2),
        interval=(nu[0], nu[-1]),
        kind="custom-table",
        params={"samples": int(nu.size)},
    )


def make_pair(kind: str, params: dict = None, interval=None) -> WeingartenPair:
    """
    Встроенная пара по имени.

    :param kind: Одно из PAIR_KINDS.
    :param params: Параметры пары.
    :param interval: Интервал nu (для некоторых видов обязателен).
    :return: WeingartenPair.
    :raises UsageError: Если вид неизвестен или параметры неполны.
    """
    params = dict(params or {})
    interval = tuple(interval) if interval is not None else None
    if kind == "minimal":
        return minimal_pair(interval or (0.01, 10.0))
    if kind == "cmc":
        return cmc_pair(params.get("H", 0.5), interval)
    if kind == "linear":
        # Local import: linear-class depends on this module.
        from weingarten.linear.relation import LinearRelation, moebius_from_relation

        relation = LinearRelation(params.get("alpha", 0.0), params.get("beta", 0.0), params.get("gamma", 0.0), 0.0)
        m = moebius_from_relation(relation)
        _require_interval(kind, interval)
        return moebius_pair(m.A, m.B, m.C, m.D, interval, kind="linear", params=params)
    if kind == "linear-fractional":
        _require_interval(kind, interval)
        if {"A", "B", "C", "D"} <= set(params):
            return moebius_pair(params["A"], params["B"], params["C"], params["D"], interval)
        from weingarten.linear.relation import LinearRelation, moebius_from_relation

        relation = LinearRelation(params["alpha"], params["beta"], params["gamma"], params["delta"])
        m = moebius_from_relation(relation)
        return moebius_pair(m.A, m.B, m.C, m.D, interval, params=params)
    if kind == "custom-table":
        return table_pair(params["nu"], params["f"], params["g"])
    raise UsageError(f"Неизвестный вид пары '{kind}', допустимы: {', '.join(PAIR_KINDS)}")


def _require_interval(kind, interval):
    if interval is None:
        raise UsageError(f"Для пары '{kind}' нужно задать интервал nu")


def pair_from_spec(spec: dict) -> WeingartenPair:
    """
    Пара из JSON-описания {kind, params..., interval}.

    :raises ParseError: Если описание неполное.
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError("Описание пары должно быть объектом с полем 'kind'")
    params = dict(spec.get("params", {}))
    params.update({k: v for k, v in spec.items() if k not in ("kind", "params", "interval")})
    try:
        return make_pair(spec["kind"], params, spec.get("interval"))
    except KeyError as exc:
        raise ParseError(f"В описании пары '{spec['kind']}' нет параметра {exc}") from exc


def load_pair(path) -> WeingartenPair:
    """Загружает пару из JSON-файла."""
    path = Path(path)
    try:
        spec = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise DataIOError(f"Не удалось прочитать пару {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: некорректный JSON: {exc}") from exc
    pair = pair_from_spec(spec)
    logger.info(f"Загружена пара '{pair.kind}' на интервале {pair.interval}")
    return pair
