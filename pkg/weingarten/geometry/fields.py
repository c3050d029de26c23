from dataclasses import dataclass
from typing import Optional

import numpy as np

from weingarten.geometry.grid import GridSpec


@dataclass(frozen=True)
class ResidualField:
    """
    Поле невязки с итоговыми характеристиками по внутренним узлам.

    reference - масштаб для относительного дефекта (например, среднее
    значение величины, которая должна быть постоянной).
    """

    values: np.ndarray
    max_abs: float
    l2: float
    reference: float = 1.0

    @classmethod
    def from_values(cls, values, reference: float = 1.0) -> "ResidualField":
        values = np.asarray(values, dtype=float)
        if values.ndim == 2 and min(values.shape) >= 3:
            core = values[1:-1, 1:-1]
        elif values.ndim == 1 and values.size >= 3:
            core = values[1:-1]
        else:
            core = values
        return cls(
            values=values,
            max_abs=float(np.max(np.abs(core))),
            l2=float(np.sqrt(np.mean(core**2))),
            reference=float(reference),
        )

    @property
    def relative_defect(self) -> float:
        """max_abs, отнесённый к |reference|."""
        return self.max_abs / abs(self.reference) if self.reference else float("inf")

    def summary(self) -> dict:
        return {"max_abs": self.max_abs, "l2": self.l2, "relative_defect": self.relative_defect}


@dataclass(frozen=True)
class FormField:
    """
    Коэффициенты первой (E, F, G) и второй (L, M, N) квадратичных форм.

    Поля второй формы равны None, пока не вычислены.
    """

    spec: GridSpec
    E: np.ndarray
    F: np.ndarray
    G: np.ndarray
    L: Optional[np.ndarray] = None
    M: Optional[np.ndarray] = None
    N: Optional[np.ndarray] = None

    @property
    def has_second_form(self) -> bool:
        return self.L is not None

    def with_second_form(self, L, M, N) -> "FormField":
        return FormField(spec=self.spec, E=self.E, F=self.F, G=self.G, L=L, M=M, N=N)

    def flipped(self) -> "FormField":
        """Формы для противоположной нормали: L, M, N меняют знак."""
        return self.with_second_form(-self.L, -self.M, -self.N)


@dataclass(frozen=True)
class CurvatureField:
    """
    Главные кривизны, главные геодезические кривизны и инварианты K, H, H'.

    nu1 - кривизна вдоль направления u; ориентация нормали выбрана так,
    что nu1 - nu2 > 0.
    """

    spec: GridSpec
    nu1: np.ndarray
    nu2: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    flipped: bool = False

    @property
    def K(self) -> np.ndarray:
        return self.nu1 * self.nu2

    @property
    def H(self) -> np.ndarray:
        return 0.5 * (self.nu1 + self.nu2)

    @property
    def Hprime(self) -> np.ndarray:
        return 0.5 * (self.nu1 - self.nu2)

    @property
    def rho1(self) -> np.ndarray:
        return _reciprocal(self.nu1)

    @property
    def rho2(self) -> np.ndarray:
        return _reciprocal(self.nu2)

    @property
    def astigmatic_interval(self) -> np.ndarray:
        """rho1 - rho2, там где оба радиуса конечны."""
        return self.rho1 - self.rho2

    def summary(self) -> dict:
        channels = {
            "nu1": self.nu1, "nu2": self.nu2, "gamma1": self.gamma1, "gamma2": self.gamma2,
            "K": self.K, "H": self.H, "Hprime": self.Hprime,
        }
        return {
            name: {"min": float(np.min(value)), "max": float(np.max(value)), "mean": float(np.mean(value))}
            for name, value in channels.items()
        }


def _reciprocal(values: np.ndarray) -> np.ndarray:
    out = np.full(np.shape(values), np.inf)
    np.divide(1.0, values, out=out, where=values != 0.0)
    return out
