import logging

import numpy as np

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import CFLError, OperatorKindError, UsageError
from weingarten.geometry.grid import GridSpec
from weingarten.pde.fields import ScalarField2D
from weingarten.pde.operators import check_reciprocal
from weingarten.pde.problem import NaturalPDEProblem
from weingarten.utils.step_logger import StepLogger

logger = logging.getLogger(__name__)

BOUNDARIES = ("outflow", "periodic")


def _second_difference_x(values: np.ndarray, dx: float, boundary: str) -> np.ndarray:
    if boundary == "periodic":
        return (np.roll(values, -1) - 2.0 * values + np.roll(values, 1)) / dx**2
    out = np.zeros_like(values)
    out[1:-1] = (values[2:] - 2.0 * values[1:-1] + values[:-2]) / dx**2
    return out


def _apply_boundary(values: np.ndarray, boundary: str) -> np.ndarray:
    if boundary == "outflow":
        values[0] = values[1]
        values[-1] = values[-2]
    return values


def solve_hyperbolic(problem: NaturalPDEProblem, values0, slope0, x_range, y_max: float, dy: float,
                     boundary: str = "outflow", eps_inv: float = DEFAULT_TOLERANCES.reciprocal) -> ScalarField2D:
    """
    Явная схема «чехарда» по y для операторов Δ̄ и Δ̄*.

    Эволюционирует q = w (или 1/w для Δ̄*) по уравнению q_yy = (w(lambda))_xx - r(lambda);
    первый шаг второго порядка строится по производной на начальной линии.

    :param problem: Уравнение с оператором Δ̄ или Δ̄*.
    :param values0: lambda(x, 0) в узлах.
    :param slope0: lambda_y(x, 0) в узлах.
    :param x_range: (x_min, x_max).
    :param y_max: Конечное значение y.
    :param dy: Шаг по y.
    :param boundary: "outflow" (копирование соседнего узла) или "periodic".
    :return: ScalarField2D на сетке nx x ny.
    :raises OperatorKindError: Если оператор эллиптический.
    :raises CFLError: Если dy > dx.
    :raises ReciprocalSingularityError: Если 1/w не определена (Δ̄*).
    :raises RangeViolationError: Если решение покидает область задачи.
    """
    if problem.kind.elliptic:
        raise OperatorKindError(
            f"Гиперболический решатель не применим к оператору {problem.kind.symbol} (строка {problem.row})"
        )
    if boundary not in BOUNDARIES:
        raise UsageError(f"Неизвестное граничное условие '{boundary}', ожидается одно из {BOUNDARIES}")
    values0 = np.asarray(values0, dtype=float)
    slope0 = np.asarray(slope0, dtype=float)
    nx = values0.size
    dx = (x_range[1] - x_range[0]) / (nx - 1)
    if dy > dx:
        raise CFLError(f"Условие Куранта нарушено: dy = {dy:.3g} > dx = {dx:.3g}")
    ny = int(round(y_max / dy)) + 1
    spec = GridSpec(nu=nx, nv=ny, u0=float(x_range[0]), v0=0.0, du=dx, dv=dy)

    def q_of(lam):
        wv = problem.w(lam)
        if problem.kind.reciprocal:
            check_reciprocal(wv[None, :], eps_inv)
        return 1.0 / wv if problem.kind.reciprocal else wv

    def acceleration(lam):
        return _second_difference_x(problem.w(lam), dx, boundary) - problem.rhs(lam)

    problem.check_range(values0, "начальное значение")
    field = np.empty((nx, ny))
    field[:, 0] = values0
    q_prev = q_of(values0)
    q_curr = q_prev + dy * problem.dq(values0) * slope0 + 0.5 * dy**2 * acceleration(values0)
    with StepLogger(f"Интегрируем уравнение строки {problem.row} по y до {y_max:g} ({ny} слоёв)"):
        for k in range(1, ny):
            lam = _apply_boundary(problem.lambda_of_q(q_curr), boundary)
            problem.check_range(lam, f"решение на слое {k}")
            field[:, k] = lam
            q_curr = _apply_boundary(q_curr, boundary)
            q_prev, q_curr = q_curr, 2.0 * q_curr - q_prev + dy**2 * acceleration(lam)
    return ScalarField2D(spec=spec, values=field)


def hyperbolic_energy(problem: NaturalPDEProblem, field: ScalarField2D) -> np.ndarray:
    """
    Дискретная энергия sum(1/2 lambda_y^2 + 1/2 lambda_x^2 + V(lambda)) dx на каждом слое y.

    :param problem: Уравнение с потенциалом V (V' = r), например строка 8.
    :param field: Решение solve_hyperbolic.
    :return: Массив энергий длины ny.
    :raises UsageError: Если у уравнения нет потенциала.
    """
    if problem.potential is None:
        raise UsageError(f"Для строки {problem.row} энергия не определена: у уравнения нет потенциала")
    lam = field.values
    lam_x = np.gradient(lam, field.dx, axis=0, edge_order=2)
    lam_y = np.gradient(lam, field.dy, axis=1, edge_order=2)
    density = 0.5 * lam_y**2 + 0.5 * lam_x**2 + problem.potential(lam)
    energy = np.sum(density, axis=0) * field.dx
    logger.debug(f"Энергия: начальная {energy[0]:.6g}, конечная {energy[-1]:.6g}")
    return energy
