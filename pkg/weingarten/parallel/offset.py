import logging
from dataclasses import dataclass

import numpy as np

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import NumericalError, SingularOffsetError, UsageError
from weingarten.geometry.forms import second_fundamental_form
from weingarten.geometry.grid import SurfaceGrid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParallelOffset:
    """
    Параллельный сдвиг на расстояние a со знаком eps = sign((1 - a nu1)(1 - a nu2)).
    """

    a: float
    epsilon: int

    def __post_init__(self):
        _require_nonzero(self.a)
        if self.epsilon not in (-1, 1):
            raise ValueError(f"eps должно быть +1 или -1, получено {self.epsilon}")

    def describe(self) -> dict:
        return {"a": self.a, "epsilon": self.epsilon}


def _require_nonzero(a: float) -> None:
    if a == 0:
        raise UsageError("Расстояние сдвига a должно быть ненулевым")


def _principal_from_forms(forms):
    """Главные кривизны в произвольных параметрах (собственные числа оператора формы)."""
    det_i = forms.E * forms.G - forms.F**2
    K = (forms.L * forms.N - forms.M**2) / det_i
    H = (forms.E * forms.N - 2.0 * forms.F * forms.M + forms.G * forms.L) / (2.0 * det_i)
    root = np.sqrt(np.maximum(H**2 - K, 0.0))
    return H + root, H - root


def offset_sign(grid: SurfaceGrid, a: float, guard: float = DEFAULT_TOLERANCES.offset_guard) -> ParallelOffset:
    """
    Знак eps для сдвига поверхности на a.

    :raises SingularOffsetError: Если |1 - a nu_i| <= guard в каком-либо узле или eps меняется по сетке.
    """
    forms, _ = second_fundamental_form(grid, allow_umbilics=True)
    return _checked_offset(forms, a, guard)


def _checked_offset(forms, a: float, guard: float) -> ParallelOffset:
    _require_nonzero(a)
    k1, k2 = _principal_from_forms(forms)
    factor1, factor2 = 1.0 - a * k1, 1.0 - a * k2
    singular = (np.abs(factor1) <= guard) | (np.abs(factor2) <= guard)
    singular_nodes = [(int(i), int(j)) for i, j in np.argwhere(singular)]
    if singular_nodes:
        raise SingularOffsetError(
            f"Сдвиг a = {a:.6g} попадает на фокальное множество в {len(singular_nodes)} узлах, "
            f"первый {singular_nodes[0]}"
        )
    signs = np.sign(factor1 * factor2)
    if np.any(signs != signs.flat[0]):
        raise SingularOffsetError(
            f"Знак (1 - a nu1)(1 - a nu2) меняется по сетке при a = {a:.6g}: сдвиг пересекает фокальное множество"
        )
    return ParallelOffset(a=float(a), epsilon=int(signs.flat[0]))


def offset_surface(grid: SurfaceGrid, a: float, guard: float = DEFAULT_TOLERANCES.offset_guard) -> SurfaceGrid:
    """
    Параллельная поверхность z + a l на той же сетке параметров.

    Нормаль l ориентирована так, что nu1 - nu2 > 0.

    :param grid: Исходная поверхность.
    :param a: Расстояние сдвига.
    :param guard: Минимально допустимое |1 - a nu_i|.
    :return: SurfaceGrid.
    :raises SingularOffsetError: Если сдвиг проходит через фокальное множество.
    """
    forms, normal = second_fundamental_form(grid, allow_umbilics=True)
    offset = _checked_offset(forms, a, guard)
    logger.debug(f"Параллельный сдвиг a = {a:.6g}, eps = {offset.epsilon:+d}")
    return SurfaceGrid(spec=grid.spec, points=grid.points + a * normal)


def parallel_principal_curvatures(nu1, nu2, a: float, guard: float = 0.0):
    """
    Главные кривизны параллельной поверхности: nu_bar_i = eps nu_i / (1 - a nu_i).

    :param nu1: Скаляр или массив.
    :param nu2: Скаляр или массив.
    :param a: Расстояние сдвига.
    :param guard: Минимально допустимое |1 - a nu_i|.
    :return: (nu1_bar, nu2_bar, eps).
    :raises SingularOffsetError: Если (1 - a nu1)(1 - a nu2) = 0 или eps неоднороден.
    """
    _require_nonzero(a)
    nu1, nu2 = np.asarray(nu1, dtype=float), np.asarray(nu2, dtype=float)
    factor1, factor2 = 1.0 - a * nu1, 1.0 - a * nu2
    if np.any(np.abs(factor1) <= guard) or np.any(np.abs(factor2) <= guard) or np.any(factor1 * factor2 == 0.0):
        raise SingularOffsetError(f"(1 - a nu1)(1 - a nu2) = 0 при a = {a:.6g}")
    signs = np.sign(factor1 * factor2)
    if np.any(signs != signs.flat[0]):
        raise SingularOffsetError("Знак eps неоднороден по входным данным")
    eps = int(signs.flat[0])
    return eps * nu1 / factor1, eps * nu2 / factor2, eps


def original_principal_curvatures(nu1_bar, nu2_bar, a: float, eps: int):
    """Обратное отображение: nu_i = eps nu_bar_i / (1 + a eps nu_bar_i)."""
    _require_nonzero(a)
    nu1_bar, nu2_bar = np.asarray(nu1_bar, dtype=float), np.asarray(nu2_bar, dtype=float)
    return eps * nu1_bar / (1.0 + a * eps * nu1_bar), eps * nu2_bar / (1.0 + a * eps * nu2_bar)


def parallel_invariants(K, H, Hprime, a: float, consistency_tol: float = 1e-10):
    """
    Инварианты параллельной поверхности (K_bar, H_bar, H'_bar, eps).

    Результат сверяется с прямыми соотношениями K = K_bar / D, H = (eps H_bar + a K_bar) / D,
    H' = eps H'_bar / D, где D = 1 + 2 a eps H_bar + a^2 K_bar.

    :raises SingularOffsetError: Если сдвиг сингулярен.
    :raises NumericalError: Если проверка согласованности не пройдена.
    """
    K, H, Hprime = (np.asarray(x, dtype=float) for x in (K, H, Hprime))
    nu1, nu2 = H + Hprime, H - Hprime
    nu1_bar, nu2_bar, eps = parallel_principal_curvatures(nu1, nu2, a)
    K_bar = nu1_bar * nu2_bar
    H_bar = 0.5 * (nu1_bar + nu2_bar)
    Hprime_bar = 0.5 * (nu1_bar - nu2_bar)

    D = 1.0 + 2.0 * a * eps * H_bar + a**2 * K_bar
    scale = 1.0 + np.abs(K) + np.abs(H) + np.abs(Hprime)
    defect = np.max(
        (np.abs(K_bar / D - K) + np.abs((eps * H_bar + a * K_bar) / D - H) + np.abs(eps * Hprime_bar / D - Hprime))
        / scale
    )
    if defect > consistency_tol:
        raise NumericalError(f"Несогласованность преобразования инвариантов: {defect:.3e}")
    return K_bar, H_bar, Hprime_bar, eps
