from enum import Enum

import numpy as np
import scipy.sparse as sp

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import ReciprocalSingularityError
from weingarten.geometry.fields import ResidualField
from weingarten.pde.fields import ScalarField2D
from weingarten.utils.finite_differences import second_derivative


class OperatorKind(str, Enum):
    """
    Четыре оператора натуральных уравнений:
    LAPLACE  - lambda_xx + lambda_yy,
    WAVE     - lambda_xx - lambda_yy,
    STAR     - lambda_xx + (1/lambda)_yy,
    WAVE_STAR - lambda_xx - (1/lambda)_yy.
    """

    LAPLACE = "laplace"
    WAVE = "wave"
    STAR = "star"
    WAVE_STAR = "wave_star"

    @property
    def symbol(self) -> str:
        return {"laplace": "Δ", "wave": "Δ̄", "star": "Δ*", "wave_star": "Δ̄*"}[self.value]

    @property
    def reciprocal(self) -> bool:
        """В y-части стоит обратная величина поля."""
        return self in (OperatorKind.STAR, OperatorKind.WAVE_STAR)

    @property
    def elliptic(self) -> bool:
        return self in (OperatorKind.LAPLACE, OperatorKind.STAR)

    @property
    def y_sign(self) -> float:
        return 1.0 if self.elliptic else -1.0


def check_reciprocal(values: np.ndarray, eps_inv: float) -> None:
    """
    :raises ReciprocalSingularityError: Если |values| <= eps_inv в каком-либо узле.
    """
    small = np.abs(values) <= eps_inv
    if np.any(small):
        i, j = np.argwhere(small)[0]
        raise ReciprocalSingularityError(
            f"Обратная величина не определена: |значение| = {abs(values[i, j]):.3e} <= {eps_inv:.1e} в узле ({i}, {j})"
        )


def y_part(kind: OperatorKind, values: np.ndarray, eps_inv: float = DEFAULT_TOLERANCES.reciprocal) -> np.ndarray:
    """Величина, дифференцируемая по y: само поле или его обратная."""
    if kind.reciprocal:
        check_reciprocal(values, eps_inv)
        return 1.0 / values
    return values


def apply_operator(kind: OperatorKind, field: ScalarField2D,
                   eps_inv: float = DEFAULT_TOLERANCES.reciprocal) -> ResidualField:
    """
    Применяет оператор центральными вторыми разностями.

    :param kind: Тип оператора.
    :param field: Поле.
    :param eps_inv: Минимально допустимое |поле| для операторов с обратной величиной.
    :return: ResidualField со значениями оператора (итоги по внутренним узлам).
    :raises ReciprocalSingularityError: Если обратная величина не определена.
    """
    kind = OperatorKind(kind)
    values = field.values
    xx = second_derivative(values, field.dx, 0)
    yy = second_derivative(y_part(kind, values, eps_inv), field.dy, 1)
    return ResidualField.from_values(xx + kind.y_sign * yy)


def second_difference_matrices(nx: int, ny: int, dx: float, dy: float):
    """
    Разреженные матрицы трёхточечных вторых разностей по x и по y
    для векторов значений в порядке i-major (индекс i * ny + j).

    Строки граничных узлов не используются решателями.
    """
    def one_dimensional(n, h):
        return sp.diags([np.ones(n - 1), -2.0 * np.ones(n), np.ones(n - 1)], [-1, 0, 1]) / h**2

    d_xx = sp.kron(one_dimensional(nx, dx), sp.identity(ny), format="csr")
    d_yy = sp.kron(sp.identity(nx), one_dimensional(ny, dy), format="csr")
    return d_xx, d_yy


def boundary_mask(nx: int, ny: int) -> np.ndarray:
    mask = np.zeros((nx, ny), dtype=bool)
    mask[0, :] = mask[-1, :] = True
    mask[:, 0] = mask[:, -1] = True
    return mask
