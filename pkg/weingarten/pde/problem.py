import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import RangeViolationError
from weingarten.geometry.fields import ResidualField
from weingarten.pde.fields import ScalarField2D
from weingarten.pde.operators import OperatorKind, apply_operator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NaturalPDEProblem:
    """
    Натуральное уравнение одного базового класса: kind(w(lambda)) = r(lambda).

    w - обёртка неизвестной (lambda, e^lambda, lambda^beta, e^{beta I}),
    r - правая часть, nu_of - геометрическая функция nu через lambda.
    Неизвестная должна лежать в открытом интервале domain, где w строго монотонна.
    """

    row: int
    kind: OperatorKind
    w: Callable
    dw: Callable
    d2w: Callable
    w_inverse: Callable
    rhs: Callable
    drhs: Callable
    nu_of: Callable
    equation: str
    substitution: str
    domain: tuple = (-np.inf, np.inf)
    params: dict = field(default_factory=dict)
    potential: Optional[Callable] = None
    lambda_of_nu: Optional[Callable] = None

    def in_range(self, values) -> bool:
        values = np.asarray(values, dtype=float)
        lo, hi = self.domain
        return bool(np.all(np.isfinite(values)) and np.all(values > lo) and np.all(values < hi))

    def check_range(self, values, what: str = "поле") -> None:
        """
        :raises RangeViolationError: Если значения вне области монотонности w.
        """
        values = np.asarray(values, dtype=float)
        if not self.in_range(values):
            lo, hi = self.domain
            bad = ~np.isfinite(values) | (values <= lo) | (values >= hi)
            index = tuple(int(i) for i in np.argwhere(bad)[0])
            raise RangeViolationError(
                f"Строка {self.row}: {what} = {values[index]:.6g} в узле {index} вне области ({lo}, {hi})"
            )

    def q(self, values):
        """Величина под второй производной по y: w или 1/w."""
        wv = self.w(values)
        return 1.0 / wv if self.kind.reciprocal else wv

    def dq(self, values):
        if self.kind.reciprocal:
            return -self.dw(values) / self.w(values) ** 2
        return self.dw(values)

    def lambda_of_q(self, q):
        return self.w_inverse(1.0 / q if self.kind.reciprocal else q)

    def describe(self) -> dict:
        return {
            "row": self.row,
            "operator": self.kind.value,
            "equation": self.equation,
            "substitution": self.substitution,
            "params": dict(self.params),
        }

    @property
    def pde(self) -> str:
        return f"{self.equation}, {self.substitution}"


def pde_residual(problem: NaturalPDEProblem, field: ScalarField2D,
                 eps_inv: float = DEFAULT_TOLERANCES.reciprocal) -> ResidualField:
    """
    Невязка натурального уравнения: kind(w(lambda)) - r(lambda) в узлах.

    :param problem: Уравнение базового класса.
    :param field: Поле lambda.
    :param eps_inv: Порог для обратной величины.
    :return: ResidualField (итоги по внутренним узлам).
    :raises RangeViolationError: Если поле вне области задачи.
    :raises ReciprocalSingularityError: Если 1/w не определена.
    """
    problem.check_range(field.values)
    wrapped = field.with_values(problem.w(field.values))
    operator_values = apply_operator(problem.kind, wrapped, eps_inv).values
    residual = ResidualField.from_values(operator_values - problem.rhs(field.values))
    logger.debug(f"Невязка строки {problem.row}: max = {residual.max_abs:.3e}, l2 = {residual.l2:.3e}")
    return residual
