"""
Точные решения натуральных уравнений базовых классов, используемые как эталоны.
"""
import numpy as np

from weingarten.errors import DomainError, UsageError
from weingarten.geometry.grid import GridSpec
from weingarten.pde.fields import ScalarField2D


def _liouville(x, y, params):
    return np.log(8.0) - 2.0 * np.log(1.0 + x**2 + y**2)


def _zero(x, y, params):
    return np.zeros_like(x)


def _row3_constant(x, y, params):
    constant = float(params.get("constant", 0.0))
    if constant not in (0.0, -2.0):
        raise UsageError(f"Постоянные решения строки 3: 0 и -2, получено {constant}")
    return np.full_like(x, constant)


def _row67_constant(x, y, params):
    beta = float(params["beta"])
    k = float(params.get("k", 1.0))
    roots = [r for r in (-2.0 * k / (beta - 1.0), -2.0 * k / (beta + 1.0)) if r > 0]
    if not roots:
        raise DomainError(f"У строки 6/7 при beta = {beta:g}, k = {k:g} нет положительного постоянного решения")
    return np.full_like(x, roots[0])


def _kink(x, y, params):
    return 4.0 * np.arctan(np.exp(x - float(params.get("x0", 0.0))))


def _log_parabola(x, y, params):
    c = float(params.get("c", 4.0))
    inner = c - x**2
    if np.any(inner <= 0):
        raise DomainError(f"ln(c - x^2) не определён на сетке: c = {c:g}, max x^2 = {float(np.max(x**2)):g}")
    return np.log(inner)


def _no_closed_form(x, y, params):
    raise UsageError("Для строк 4 и 5 замкнутого решения нет: используйте вращательный пример (ОДУ)")


EXACT_SOLUTIONS = {
    1: _liouville,
    2: _zero,
    3: _row3_constant,
    4: _no_closed_form,
    5: _no_closed_form,
    6: _row67_constant,
    7: _row67_constant,
    8: _kink,
    9: _log_parabola,
    10: _zero,
}


def exact_solution(row: int, params: dict, spec: GridSpec) -> ScalarField2D:
    """
    Точное решение уравнения строки row на сетке spec.

    строка 1 - ln 8 - 2 ln(1 + x^2 + y^2); 2 и 10 - ноль; 3 - константа 0 или -2;
    6/7 - положительный постоянный корень; 8 - кинк 4 arctan e^{x - x0};
    9 - ln(c - x^2).

    :param row: Номер строки 1..10.
    :param params: Параметры строки (beta, constant, x0, c).
    :param spec: Сетка.
    :return: ScalarField2D.
    :raises UsageError: Если строки нет или для неё нет замкнутого решения.
    :raises DomainError: Если решение не определено на сетке.
    """
    if row not in EXACT_SOLUTIONS:
        raise UsageError(f"Номер строки должен быть от 1 до 10, получено {row}")
    xx, yy = spec.mesh()
    return ScalarField2D(spec=spec, values=EXACT_SOLUTIONS[row](xx, yy, params or {}))
