import logging

import numpy as np

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import RegularityError, UmbilicError
from weingarten.geometry.fields import FormField
from weingarten.geometry.grid import SurfaceGrid
from weingarten.utils.finite_differences import first_derivative, mixed_derivative, second_derivative

logger = logging.getLogger(__name__)


def _tangents(grid: SurfaceGrid):
    z_u = first_derivative(grid.points, grid.spec.du, 0)
    z_v = first_derivative(grid.points, grid.spec.dv, 1)
    return z_u, z_v


def _check_regularity(cross: np.ndarray, tol_regularity: float) -> np.ndarray:
    norm = np.linalg.norm(cross, axis=-1)
    bad = norm <= tol_regularity
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        raise RegularityError(
            f"Вырожденная параметризация: |z_u x z_v| = {norm[i, j]:.3e} <= {tol_regularity:.1e} "
            f"в узле ({i}, {j}), всего таких узлов {int(bad.sum())}"
        )
    return norm


def first_fundamental_form(grid: SurfaceGrid, tol_regularity: float = DEFAULT_TOLERANCES.regularity) -> FormField:
    """
    Коэффициенты первой квадратичной формы E, F, G.

    :param grid: Поверхность на сетке.
    :param tol_regularity: Минимально допустимое |z_u x z_v|.
    :return: FormField без второй формы.
    :raises RegularityError: Если EG - F^2 не положительно.
    """
    z_u, z_v = _tangents(grid)
    _check_regularity(np.cross(z_u, z_v), tol_regularity)
    E = np.einsum("ijk,ijk->ij", z_u, z_u)
    F = np.einsum("ijk,ijk->ij", z_u, z_v)
    G = np.einsum("ijk,ijk->ij", z_v, z_v)
    return FormField(spec=grid.spec, E=E, F=F, G=G)


def orientation_sign(nu1: np.ndarray, nu2: np.ndarray, tol_umbilic: float, allow_umbilics: bool = False) -> int:
    """
    Знак, на который нужно умножить нормаль, чтобы nu1 - nu2 > 0.

    Узлы с |nu1 - nu2| <= tol_umbilic в решении не участвуют.

    :raises UmbilicError: Если знак nu1 - nu2 меняется по сетке.
    """
    diff = nu1 - nu2
    significant = diff[np.abs(diff) > tol_umbilic]
    if significant.size == 0:
        return 1
    positive = int(np.count_nonzero(significant > 0))
    negative = significant.size - positive
    if positive and negative and not allow_umbilics:
        raise UmbilicError(
            f"Знак nu1 - nu2 меняется по сетке ({positive} узлов '+', {negative} узлов '-'): "
            f"на поверхности есть омбилические точки"
        )
    return 1 if positive >= negative else -1


def second_fundamental_form(
    grid: SurfaceGrid,
    tol_regularity: float = DEFAULT_TOLERANCES.regularity,
    tol_umbilic: float = DEFAULT_TOLERANCES.umbilic,
    allow_umbilics: bool = False,
):
    """
    Коэффициенты обеих квадратичных форм и поле единичных нормалей.

    Нормаль ориентируется глобально так, чтобы L/E - N/G > 0.

    :param grid: Поверхность на сетке.
    :param tol_regularity: Минимально допустимое |z_u x z_v|.
    :param tol_umbilic: Порог, ниже которого узел считается омбилическим.
    :param allow_umbilics: Не считать смену знака nu1 - nu2 ошибкой.
    :return: (FormField, массив нормалей формы (nu, nv, 3)).
    :raises RegularityError: Если параметризация вырождена.
    :raises UmbilicError: Если знак nu1 - nu2 меняется по сетке.
    """
    spec = grid.spec
    z_u, z_v = _tangents(grid)
    cross = np.cross(z_u, z_v)
    norm = _check_regularity(cross, tol_regularity)
    normal = cross / norm[..., None]

    z_uu = second_derivative(grid.points, spec.du, 0)
    z_vv = second_derivative(grid.points, spec.dv, 1)
    z_uv = mixed_derivative(grid.points, spec.du, spec.dv)

    E = np.einsum("ijk,ijk->ij", z_u, z_u)
    F = np.einsum("ijk,ijk->ij", z_u, z_v)
    G = np.einsum("ijk,ijk->ij", z_v, z_v)
    L = np.einsum("ijk,ijk->ij", z_uu, normal)
    M = np.einsum("ijk,ijk->ij", z_uv, normal)
    N = np.einsum("ijk,ijk->ij", z_vv, normal)

    sign = orientation_sign(L / E, N / G, tol_umbilic, allow_umbilics)
    if sign < 0:
        logger.debug("Нормаль перевёрнута для выполнения nu1 - nu2 > 0")
        L, M, N, normal = -L, -M, -N, -normal
    return FormField(spec=spec, E=E, F=F, G=G, L=L, M=M, N=N), normal
