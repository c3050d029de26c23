"""
Восстановление поверхности по решению натурального уравнения интегрированием подвижного репера.

Репер (X, Y, l): X = z_u/sqrt(E), Y = z_v/sqrt(G), l = X x Y.
Вдоль u: X_u = sqrt(E)(gamma1 Y + nu1 l), Y_u = -sqrt(E) gamma1 X, l_u = -sqrt(E) nu1 X.
Вдоль v: X_v = sqrt(G) gamma2 Y, Y_v = sqrt(G)(-gamma2 X + nu2 l), l_v = -sqrt(G) nu2 Y.
"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import CompatibilityError, PDEResidualError
from weingarten.geometry.fields import ResidualField
from weingarten.geometry.grid import SurfaceGrid
from weingarten.natural.nu_field import NuField
from weingarten.natural.pairs import NaturalGauge, WeingartenPair
from weingarten.natural.pde import natural_metric_field, natural_pde_residual, natural_geodesic_curvatures
from weingarten.utils.frames import orthonormality_defect, orthonormalize, rk4_step
from weingarten.utils.step_logger import StepLogger

logger = logging.getLogger(__name__)

ALONG_U, ALONG_V = 0, 1


@dataclass(frozen=True)
class ReconstructionReport:
    """
    Результат восстановления: поверхность, дефект совместности, невязка уравнения
    и узлы с нулевым градиентом nu.
    """

    grid: SurfaceGrid
    compatibility_defect: float
    pde_residual: ResidualField
    frame_drift: float
    degenerate_nodes: tuple = ()

    def as_dict(self) -> dict:
        return {
            "compatibility_defect": self.compatibility_defect,
            "pde_residual": self.pde_residual.summary(),
            "frame_drift": self.frame_drift,
            "degenerate_nodes": [list(node) for node in self.degenerate_nodes],
        }


class _Coefficients:
    """Сплайны (масштаб, геодезическая кривизна, главная кривизна) вдоль одного направления."""

    def __init__(self, nodes: np.ndarray, scale, gamma, nu, axis: int):
        self.axis = axis
        self._spline = CubicSpline(nodes, np.stack([scale, gamma, nu], axis=-1), axis=axis)

    def __call__(self, t: float, lines: slice) -> np.ndarray:
        return self._spline(t)[lines]


def _frame_rhs(state: np.ndarray, coefficients: np.ndarray, direction: int) -> np.ndarray:
    scale, gamma, nu = (coefficients[:, k, None] for k in range(3))
    X, Y, l = state[:, 3:6], state[:, 6:9], state[:, 9:12]
    if direction == ALONG_U:
        parts = (X, gamma * Y + nu * l, -gamma * X, -nu * X)
    else:
        parts = (Y, gamma * Y, -gamma * X + nu * l, -nu * Y)
    return scale * np.concatenate(parts, axis=1)


def _sweep(state0: np.ndarray, nodes: np.ndarray, coefficients: _Coefficients, lines: slice):
    """РК4 вдоль пучка линий с переортогонализацией репера на каждом шаге."""
    direction = coefficients.axis
    states = [state0]
    drift = 0.0
    state = state0
    for k in range(len(nodes) - 1):
        state = rk4_step(lambda t, y: _frame_rhs(y, coefficients(t, lines), direction),
                         nodes[k], state, nodes[k + 1] - nodes[k])
        frame = state[:, 3:].reshape(-1, 3, 3)
        drift = max(drift, orthonormality_defect(frame))
        state = np.concatenate([state[:, :3], orthonormalize(frame).reshape(-1, 9)], axis=1)
        states.append(state)
    return np.stack(states), drift


def _initial_state() -> np.ndarray:
    return np.concatenate([np.zeros(3), np.eye(3).ravel()])[None, :]


def reconstruct_with_report(pair: WeingartenPair, gauge: NaturalGauge, nu: NuField,
                            tol_pde: float = DEFAULT_TOLERANCES.pde_reconstruct,
                            tol_compat: float = DEFAULT_TOLERANCES.compatibility,
                            tol_quad: float = DEFAULT_TOLERANCES.quadrature) -> ReconstructionReport:
    """
    Восстанавливает поверхность по полю nu и сравнивает два порядка интегрирования:
    начальная линия u = u0 и затем линии v = const, либо начальная линия v = v0 и затем u = const.

    :param pair: Пара Вайнгартена.
    :param gauge: Нормировка натуральных параметров.
    :param nu: Решение натурального уравнения.
    :param tol_pde: Допуск на max |невязки| натурального уравнения.
    :param tol_compat: Допуск на дефект совместности, отнесённый к диаметру поверхности.
    :return: ReconstructionReport; поверхность получена первым порядком интегрирования.
    :raises PDEResidualError: Если поле не удовлетворяет уравнению.
    :raises CompatibilityError: Если дефект совместности превышает допуск.
    """
    with StepLogger("Восстанавливаем поверхность по решению натурального уравнения"):
        residual = natural_pde_residual(pair, gauge, nu, tol_quad)
        if residual.max_abs > tol_pde:
            raise PDEResidualError(
                f"Поле nu не удовлетворяет натуральному уравнению: max|R| = {residual.max_abs:.3e} > {tol_pde:.1e}"
            )
        degenerate = tuple(nu.degenerate_nodes())
        if degenerate:
            logger.warning(f"Градиент nu обращается в ноль в {len(degenerate)} узлах, первый {degenerate[0]}")
        spec = nu.spec
        E, G = natural_metric_field(pair, gauge, nu, tol_quad)
        gamma1, gamma2 = natural_geodesic_curvatures(pair, gauge, nu, tol_quad)
        nu1, nu2 = pair.f(nu.values), pair.g(nu.values)
        along_u = _Coefficients(spec.u, np.sqrt(E), gamma1, nu1, ALONG_U)
        along_v = _Coefficients(spec.v, np.sqrt(G), gamma2, nu2, ALONG_V)
        everything = slice(None)

        start_v, drift_a = _sweep(_initial_state(), spec.v, along_v, slice(0, 1))
        first, drift_b = _sweep(start_v[:, 0, :], spec.u, along_u, everything)
        start_u, drift_c = _sweep(_initial_state(), spec.u, along_u, slice(0, 1))
        second, drift_d = _sweep(start_u[:, 0, :], spec.v, along_v, everything)

        z_first = first[:, :, :3]
        z_second = np.transpose(second, (1, 0, 2))[:, :, :3]
        grid = SurfaceGrid(spec=spec, points=z_first)
        scale = grid.diameter or 1.0
        defect = float(np.max(np.linalg.norm(z_first - z_second, axis=-1))) / scale
        drift = max(drift_a, drift_b, drift_c, drift_d)
        logger.info(f"Дефект совместности {defect:.3e}, дрейф ортонормированности {drift:.3e}")
        if defect > tol_compat:
            raise CompatibilityError(
                f"Два порядка интегрирования репера расходятся: дефект {defect:.3e} > {tol_compat:.1e}"
            )
        return ReconstructionReport(
            grid=grid, compatibility_defect=defect, pde_residual=residual, frame_drift=drift,
            degenerate_nodes=degenerate,
        )


def reconstruct_surface(pair: WeingartenPair, gauge: NaturalGauge, nu: NuField, **tolerances) -> SurfaceGrid:
    """Поверхность по решению натурального уравнения (единственная с точностью до движения)."""
    return reconstruct_with_report(pair, gauge, nu, **tolerances).grid
