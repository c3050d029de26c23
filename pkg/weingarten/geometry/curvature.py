import logging

import numpy as np

from weingarten.configuration import DEFAULT_TOLERANCES
from weingarten.errors import NotPrincipalError, UmbilicError
from weingarten.geometry.fields import CurvatureField, FormField, ResidualField
from weingarten.geometry.forms import orientation_sign, second_fundamental_form
from weingarten.geometry.grid import SurfaceGrid
from weingarten.utils.finite_differences import first_derivative, interior

logger = logging.getLogger(__name__)

REGULARITY_TYPES = ("strongly_regular", "rotational", "mixed")


def _check_principal(forms: FormField, tol_principal: float) -> None:
    # Односторонние разности на границе дают F, M порядка h^3 и для главных параметров.
    metric_scale = max(float(np.max(np.abs(forms.E))), float(np.max(np.abs(forms.G))))
    max_f = float(np.max(np.abs(interior(forms.F))))
    if max_f > tol_principal * metric_scale:
        raise NotPrincipalError(
            f"Параметры не ортогональны: max|F| = {max_f:.3e} > {tol_principal * metric_scale:.3e}"
        )
    shape_scale = max(float(np.max(np.abs(forms.L))), float(np.max(np.abs(forms.N))))
    max_m = float(np.max(np.abs(interior(forms.M))))
    if max_m > tol_principal * shape_scale:
        raise NotPrincipalError(
            f"Параметры не сопряжены: max|M| = {max_m:.3e} > {tol_principal * shape_scale:.3e}"
        )


def curvature_field(
    forms: FormField,
    tol_principal: float = DEFAULT_TOLERANCES.principal,
    tol_umbilic: float = DEFAULT_TOLERANCES.umbilic,
    check_umbilics: bool = True,
) -> CurvatureField:
    """
    Главные кривизны nu1 = L/E, nu2 = N/G и главные геодезические кривизны
    gamma1 = -E_v / (2E sqrt(G)), gamma2 = G_u / (2G sqrt(E)).

    :param forms: Обе квадратичные формы в главных параметрах.
    :param tol_principal: Относительный допуск на F и M во внутренних узлах.
    :param tol_umbilic: Минимально допустимое nu1 - nu2.
    :param check_umbilics: Проверять отсутствие омбилических точек.
    :return: CurvatureField.
    :raises NotPrincipalError: Если F или M превышают допуск.
    :raises UmbilicError: Если nu1 - nu2 < tol_umbilic в каком-либо узле.
    """
    if not forms.has_second_form:
        raise ValueError("Для кривизн нужна вторая квадратичная форма")
    _check_principal(forms, tol_principal)

    sign = orientation_sign(forms.L / forms.E, forms.N / forms.G, tol_umbilic, allow_umbilics=not check_umbilics)
    flipped = sign < 0
    if flipped:
        forms = forms.flipped()
    nu1 = forms.L / forms.E
    nu2 = forms.N / forms.G

    if check_umbilics:
        diff = nu1 - nu2
        bad = diff < tol_umbilic
        if np.any(bad):
            i, j = np.argwhere(bad)[0]
            raise UmbilicError(
                f"Омбилические точки: nu1 - nu2 = {diff[i, j]:.3e} < {tol_umbilic:.1e} в узле ({i}, {j}), "
                f"всего {int(bad.sum())} узлов"
            )

    spec = forms.spec
    sqrt_e = np.sqrt(forms.E)
    sqrt_g = np.sqrt(forms.G)
    gamma1 = -first_derivative(forms.E, spec.dv, 1) / (2.0 * forms.E * sqrt_g)
    gamma2 = first_derivative(forms.G, spec.du, 0) / (2.0 * forms.G * sqrt_e)
    return CurvatureField(spec=spec, nu1=nu1, nu2=nu2, gamma1=gamma1, gamma2=gamma2, flipped=flipped)


def analyze_surface(grid: SurfaceGrid, check_umbilics: bool = True, **tolerances):
    """
    Формы и кривизны поверхности за один вызов.

    :param grid: Поверхность в главных параметрах.
    :param check_umbilics: Проверять отсутствие омбилических точек.
    :param tolerances: tol_regularity, tol_principal, tol_umbilic.
    :return: (FormField, CurvatureField, нормали).
    """
    tol_regularity = tolerances.get("tol_regularity", DEFAULT_TOLERANCES.regularity)
    tol_principal = tolerances.get("tol_principal", DEFAULT_TOLERANCES.principal)
    tol_umbilic = tolerances.get("tol_umbilic", DEFAULT_TOLERANCES.umbilic)
    forms, normal = second_fundamental_form(
        grid, tol_regularity=tol_regularity, tol_umbilic=tol_umbilic, allow_umbilics=not check_umbilics
    )
    cf = curvature_field(forms, tol_principal=tol_principal, tol_umbilic=tol_umbilic, check_umbilics=check_umbilics)
    return forms, cf, normal


def _principal_difference(cf: CurvatureField) -> np.ndarray:
    diff = cf.nu1 - cf.nu2
    if np.any(diff == 0.0):
        raise UmbilicError("nu1 = nu2 в узлах сетки: невязки Кодацци не определены")
    return diff


def codazzi_residual(cf: CurvatureField, forms: FormField):
    """
    Невязки уравнений Кодацци в форме
    gamma1 = (nu1)_v / (sqrt(G)(nu1 - nu2)), gamma2 = (nu2)_u / (sqrt(E)(nu1 - nu2)).

    :return: (ResidualField, ResidualField).
    :raises UmbilicError: Если nu1 = nu2 в каком-либо узле.
    """
    spec = cf.spec
    diff = _principal_difference(cf)
    nu1_v = first_derivative(cf.nu1, spec.dv, 1)
    nu2_u = first_derivative(cf.nu2, spec.du, 0)
    first = cf.gamma1 - nu1_v / (np.sqrt(forms.G) * diff)
    second = cf.gamma2 - nu2_u / (np.sqrt(forms.E) * diff)
    return ResidualField.from_values(first), ResidualField.from_values(second)


def gauss_residual(cf: CurvatureField, forms: FormField) -> ResidualField:
    """
    Невязка уравнения Гаусса Y(gamma1) - X(gamma2) - (gamma1^2 + gamma2^2) - K,
    где X = E^(-1/2) d/du, Y = G^(-1/2) d/dv.
    """
    spec = cf.spec
    y_gamma1 = first_derivative(cf.gamma1, spec.dv, 1) / np.sqrt(forms.G)
    x_gamma2 = first_derivative(cf.gamma2, spec.du, 0) / np.sqrt(forms.E)
    values = y_gamma1 - x_gamma2 - (cf.gamma1**2 + cf.gamma2**2) - cf.K
    return ResidualField.from_values(values)


def umbilic_scan(cf: CurvatureField, tol: float = DEFAULT_TOLERANCES.umbilic) -> list:
    """
    Узлы, в которых nu1 - nu2 < tol.

    :return: Список пар индексов (i, j) в порядке i-major.
    """
    return [(int(i), int(j)) for i, j in np.argwhere(cf.nu1 - cf.nu2 < tol)]


def codazzi_metric(cf: CurvatureField, eps: float = 1e-12):
    """
    sqrt(E) и sqrt(G), восстановленные из уравнений Кодацци для
    сильно регулярных поверхностей. В узлах, где gamma обращается в ноль, NaN.

    :return: (sqrt_E, sqrt_G).
    """
    spec = cf.spec
    diff = _principal_difference(cf)
    nu2_u = first_derivative(cf.nu2, spec.du, 0)
    nu1_v = first_derivative(cf.nu1, spec.dv, 1)
    sqrt_e = np.full(diff.shape, np.nan)
    sqrt_g = np.full(diff.shape, np.nan)
    ok2 = np.abs(cf.gamma2) > eps
    ok1 = np.abs(cf.gamma1) > eps
    sqrt_e[ok2] = nu2_u[ok2] / (cf.gamma2[ok2] * diff[ok2])
    sqrt_g[ok1] = nu1_v[ok1] / (cf.gamma1[ok1] * diff[ok1])
    return sqrt_e, sqrt_g


def regularity_type(cf: CurvatureField, tol: float = 1e-6) -> str:
    """
    Тип главной сети: 'strongly_regular' (gamma1 gamma2 != 0 всюду),
    'rotational' (gamma1 = 0, gamma2 != 0) или 'mixed'.
    """
    g1_zero = np.abs(cf.gamma1) <= tol
    g2_zero = np.abs(cf.gamma2) <= tol
    if not np.any(g1_zero) and not np.any(g2_zero):
        return "strongly_regular"
    if np.all(g1_zero) and not np.any(g2_zero):
        return "rotational"
    return "mixed"
