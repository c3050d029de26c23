import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import cumulative_trapezoid
from scipy.interpolate import CubicSpline

from weingarten.errors import UsageError

logger = logging.getLogger(__name__)

FRAME_TOL = 1e-12


def _constant(value: float) -> Callable:
    return lambda s: np.full(np.shape(s), float(value))


@dataclass(frozen=True)
class SpaceCurveSpec:
    """
    Кривая c2 в натуральном параметре v: кривизна kappa(v) > 0, кручение tau(v)
    и начальный репер Френе t, n, b (ортонормированный, правый).
    """

    kappa: Callable
    tau: Callable
    t0: tuple = (1.0, 0.0, 0.0)
    n0: tuple = (0.0, 1.0, 0.0)
    b0: tuple = (0.0, 0.0, 1.0)
    x0: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        frame = self.frame0
        if np.max(np.abs(frame @ frame.T - np.eye(3))) > FRAME_TOL:
            raise UsageError("Начальный репер кривой не ортонормирован")
        if np.linalg.det(frame) < 0:
            raise UsageError("Начальный репер кривой должен быть правым")

    @classmethod
    def circle(cls, radius: float = 1.0, **frame) -> "SpaceCurveSpec":
        """Окружность радиуса radius (kappa = 1/radius, tau = 0)."""
        if radius <= 0:
            raise UsageError(f"Радиус окружности должен быть положительным, получено {radius}")
        return cls(kappa=_constant(1.0 / radius), tau=_constant(0.0), **frame)

    @classmethod
    def helix(cls, kappa: float, tau: float, **frame) -> "SpaceCurveSpec":
        return cls(kappa=_constant(kappa), tau=_constant(tau), **frame)

    @property
    def frame0(self) -> np.ndarray:
        return np.array([self.t0, self.n0, self.b0], dtype=float)


@dataclass(frozen=True)
class MeridianSpec:
    """
    Плоская кривая c1, заданная кривизной kappa1(s1) в натуральном параметре.

    Начальные условия фиксированы: lambda(0) = mu(0) = 0, lambda'(0) = 0, mu'(0) = 1.
    """

    kappa1: Callable

    @classmethod
    def circle(cls, radius: float) -> "MeridianSpec":
        return cls(kappa1=_constant(1.0 / radius))

    @classmethod
    def from_samples(cls, s, kappa1_values) -> "MeridianSpec":
        return cls(kappa1=CubicSpline(np.asarray(s, dtype=float), np.asarray(kappa1_values, dtype=float)))


@dataclass(frozen=True)
class Meridian:
    """Отсчёты плоской кривой: s1, угол phi = int kappa1, lambda(s1), mu(s1)."""

    s: np.ndarray
    phi: np.ndarray
    lam: np.ndarray
    mu: np.ndarray
    kappa1: np.ndarray = field(repr=False, default=None)

    @property
    def lam_dot(self) -> np.ndarray:
        return np.sin(self.phi)

    @property
    def mu_dot(self) -> np.ndarray:
        return np.cos(self.phi)


def meridian_from_curvature(m: MeridianSpec, s1_max: float, ds: float) -> Meridian:
    """
    Плоская кривая по кривизне: phi = int kappa1, lambda = int sin(phi), mu = int cos(phi)
    (вложенные кумулятивные интегралы методом трапеций).

    :param m: Кривизна меридиана.
    :param s1_max: Конечное значение натурального параметра.
    :param ds: Шаг.
    :return: Meridian.
    :raises UsageError: Если ds <= 0 или s1_max <= 0.
    """
    if ds <= 0 or s1_max <= 0:
        raise UsageError(f"Нужны положительные s1_max и ds, получено {s1_max}, {ds}")
    count = int(round(s1_max / ds)) + 1
    s = np.linspace(0.0, s1_max, count)
    kappa1 = np.asarray(m.kappa1(s), dtype=float)
    phi = cumulative_trapezoid(kappa1, s, initial=0.0)
    lam = cumulative_trapezoid(np.sin(phi), s, initial=0.0)
    mu = cumulative_trapezoid(np.cos(phi), s, initial=0.0)
    return Meridian(s=s, phi=phi, lam=lam, mu=mu, kappa1=kappa1)
