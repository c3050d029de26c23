"""
Демпфированный метод Ньютона для эллиптических натуральных уравнений (операторы Δ и Δ*).

Неизвестные - значения lambda во всех узлах; в граничных узлах уравнение
lambda = заданное значение, во внутренних трёхточечная дискретизация
(w(lambda))_xx + (q(lambda))_yy - r(lambda) = 0, где q = w или 1/w.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import spsolve

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import NonConvergenceError, OperatorKindError, RangeViolationError
from weingarten.pde.fields import ScalarField2D
from weingarten.pde.operators import boundary_mask, check_reciprocal, second_difference_matrices
from weingarten.pde.problem import NaturalPDEProblem
from weingarten.utils.step_logger import StepLogger

logger = logging.getLogger(__name__)


@dataclass
class SolveReport:
    """Отчёт о сходимости метода Ньютона."""

    converged: bool = False
    iterations: int = 0
    reason: str = ""
    residual_history: list = field(default_factory=list)
    update_history: list = field(default_factory=list)
    step_history: list = field(default_factory=list)
    quadratic_constant: Optional[float] = None

    @property
    def final_residual(self) -> float:
        return self.residual_history[-1] if self.residual_history else float("nan")

    def as_dict(self) -> dict:
        return {
            "converged": self.converged,
            "iterations": self.iterations,
            "reason": self.reason,
            "final_residual": self.final_residual,
            "residual_history": list(self.residual_history),
            "update_history": list(self.update_history),
            "step_history": list(self.step_history),
            "quadratic_constant": self.quadratic_constant,
        }


def quadratic_constant(history, floor: float = 1e-13) -> Optional[float]:
    """
    Оценка C в r_{k+1} <= C r_k^2 по последним трём невязкам выше уровня округления.

    :return: C или None, если точек недостаточно.
    """
    tail = [r for r in history if r > floor][-3:]
    if len(tail) < 2:
        return None
    return float(max(tail[k + 1] / tail[k] ** 2 for k in range(len(tail) - 1)))


class EllipticSolver:
    """
    Решатель одной задачи Дирихле; экземпляр используется один раз.
    """

    def __init__(self, problem: NaturalPDEProblem, boundary: ScalarField2D,
                 tol_residual: float = DEFAULT_TOLERANCES.newton_residual,
                 tol_update: float = DEFAULT_TOLERANCES.newton_update,
                 max_iter: int = DEFAULT_TOLERANCES.newton_max_iter,
                 max_halvings: int = DEFAULT_TOLERANCES.line_search_halvings,
                 eps_inv: float = DEFAULT_TOLERANCES.reciprocal):
        if not problem.kind.elliptic:
            raise OperatorKindError(
                f"Эллиптический решатель не применим к оператору {problem.kind.symbol} (строка {problem.row})"
            )
        self.problem = problem
        self.spec = boundary.spec
        self.tol_residual = tol_residual
        self.tol_update = tol_update
        self.max_iter = max_iter
        self.max_halvings = max_halvings
        self.eps_inv = eps_inv

        nx, ny = self.spec.nu, self.spec.nv
        self.mask = boundary_mask(nx, ny)
        self.boundary_values = np.where(self.mask, boundary.values, 0.0)
        problem.check_range(boundary.values[self.mask], "граничное значение")
        self.d_xx, self.d_yy = second_difference_matrices(nx, ny, self.spec.du, self.spec.dv)
        flat_mask = self.mask.ravel()
        self.interior_rows = sp.diags((~flat_mask).astype(float))
        self.boundary_rows = sp.diags(flat_mask.astype(float))
        self.report = SolveReport()

    def residual(self, lam: np.ndarray) -> np.ndarray:
        flat = lam.ravel()
        w = self.problem.w(flat)
        if self.problem.kind.reciprocal:
            check_reciprocal(w.reshape(lam.shape), self.eps_inv)
        interior = self.d_xx @ w + self.d_yy @ self.problem.q(flat) - self.problem.rhs(flat)
        return np.where(self.mask.ravel(), flat - self.boundary_values.ravel(), interior)

    def jacobian(self, lam: np.ndarray):
        flat = lam.ravel()
        operator = (
            self.d_xx @ sp.diags(self.problem.dw(flat))
            + self.d_yy @ sp.diags(self.problem.dq(flat))
            - sp.diags(self.problem.drhs(flat))
        )
        return (self.interior_rows @ operator + self.boundary_rows).tocsc()

    def harmonic_extension(self) -> np.ndarray:
        """Гармоническое продолжение граничных значений внутрь области."""
        laplace = (self.interior_rows @ (self.d_xx + self.d_yy) + self.boundary_rows).tocsc()
        return spsolve(laplace, self.boundary_values.ravel()).reshape(self.mask.shape)

    def _line_search(self, lam: np.ndarray, delta: np.ndarray, current: float):
        t = 1.0
        left_range = True
        for _ in range(self.max_halvings + 1):
            candidate = lam + t * delta
            if self.problem.in_range(candidate):
                left_range = False
                norm = float(np.max(np.abs(self.residual(candidate))))
                if norm < current:
                    return candidate, t, norm
            t *= 0.5
        if left_range:
            raise RangeViolationError(
                f"Строка {self.problem.row}: итерация Ньютона покидает область ({self.problem.domain[0]}, "
                f"{self.problem.domain[1]}) после {self.max_halvings} делений шага"
            )
        return None, t, current

    def solve(self, init: Optional[ScalarField2D] = None) -> ScalarField2D:
        """
        :raises NonConvergenceError: Если метод не сошёлся за max_iter итераций.
        :raises RangeViolationError: Если итерация покидает область задачи.
        """
        lam = self.harmonic_extension() if init is None else np.array(init.values, dtype=float)
        lam = np.where(self.mask, self.boundary_values, lam)
        self.problem.check_range(lam, "начальное приближение")
        report = self.report
        norm = float(np.max(np.abs(self.residual(lam))))
        report.residual_history.append(norm)

        for iteration in range(1, self.max_iter + 1):
            if norm < self.tol_residual:
                report.converged, report.reason = True, "residual"
                break
            delta = spsolve(self.jacobian(lam), -self.residual(lam).reshape(-1)).reshape(lam.shape)
            candidate, t, new_norm = self._line_search(lam, delta, norm)
            # Критерий по обновлению считается по полному шагу Ньютона, не по затухшему.
            update = float(np.max(np.abs(delta))) / max(1.0, float(np.max(np.abs(lam))))
            report.iterations = iteration
            report.update_history.append(update)
            report.step_history.append(t)
            logger.debug(f"Ньютон, итерация {iteration}: невязка {new_norm:.3e}, шаг {t:.3g}, обновление {update:.3e}")
            if candidate is None:
                if update < self.tol_update:
                    report.converged, report.reason = True, "stagnation"
                else:
                    report.reason = "line_search"
                break
            lam, norm = candidate, new_norm
            report.residual_history.append(norm)
            if update < self.tol_update:
                report.converged, report.reason = True, "update"
                break
        else:
            if norm < self.tol_residual:
                report.converged, report.reason = True, "residual"

        report.quadratic_constant = quadratic_constant(report.residual_history)
        if not report.converged:
            raise NonConvergenceError(
                f"Метод Ньютона не сошёлся для строки {self.problem.row} "
                f"({report.reason or 'лимит ' + str(self.max_iter) + ' итераций'}): невязка {norm:.3e}",
                history=report.residual_history,
            )
        logger.info(
            f"Ньютон сошёлся за {report.iterations} итераций ({report.reason}), невязка {norm:.3e}"
        )
        return ScalarField2D(spec=self.spec, values=lam)


def solve_elliptic(problem: NaturalPDEProblem, boundary: ScalarField2D, init: Optional[ScalarField2D] = None,
                   **options):
    """
    Решает задачу Дирихле для эллиптического натурального уравнения.

    :param problem: Уравнение с оператором Δ или Δ*.
    :param boundary: Поле, граничные узлы которого задают условия Дирихле (область и сетка берутся из него).
    :param init: Начальное приближение; по умолчанию гармоническое продолжение границы.
    :param options: tol_residual, tol_update, max_iter, max_halvings, eps_inv.
    :return: (ScalarField2D, SolveReport).
    :raises OperatorKindError: Если оператор гиперболический.
    :raises NonConvergenceError: Если метод не сошёлся.
    :raises RangeViolationError: Если итерация покидает область задачи.
    """
    solver = EllipticSolver(problem, boundary, **options)
    with StepLogger(f"Решаем уравнение строки {problem.row} методом Ньютона на сетке {solver.spec.nu}x{solver.spec.nv}"):
        field = solver.solve(init)
    return field, solver.report
