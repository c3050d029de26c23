"""
Аналитические поверхности в главных параметрах.

Первый параметр u всегда отвечает меридиану или образующей, второй v - углу поворота
или сдвигу вдоль оси.
"""
import logging

import numpy as np

from weingarten.errors import UnknownSurfaceError, UsageError
from weingarten.geometry.grid import GridSpec, SurfaceGrid

logger = logging.getLogger(__name__)


def _positive(params: dict, key: str, default: float) -> float:
    try:
        value = float(params.get(key, default))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"Параметр '{key}' должен быть числом, получено {params.get(key)!r}") from exc
    if value <= 0:
        raise UsageError(f"Параметр '{key}' должен быть положительным, получено {value}")
    return value


def plane(u, v, params):
    return u, v, np.zeros_like(u)


def cylinder(u, v, params):
    r = _positive(params, "r", 1.0)
    return r * np.cos(u), r * np.sin(u), v


def torus(u, v, params):
    """Тор: u - угол вдоль меридиана трубки, v - угол поворота вокруг оси."""
    R = _positive(params, "R", 2.0)
    r = _positive(params, "r", 1.0)
    if r >= R:
        raise UsageError(f"Для тора нужно r < R, получено r = {r}, R = {R}")
    radius = R + r * np.cos(u)
    return radius * np.cos(v), radius * np.sin(v), r * np.sin(u)


def catenoid(u, v, params):
    c = _positive(params, "c", 1.0)
    return c * np.cosh(u) * np.cos(v), c * np.cosh(u) * np.sin(v), c * u


def stretched_catenoid(u, v, params):
    """Катеноид с ненатуральным параметром s, u = s^(1/3); s берётся положительным."""
    c = _positive(params, "c", 1.0)
    if np.any(u <= 0):
        raise UsageError("Растянутый катеноид определён при u > 0")
    t = np.cbrt(u)
    return c * np.cosh(t) * np.cos(v), c * np.cosh(t) * np.sin(v), c * t


def pseudosphere(u, v, params):
    if np.any(u <= 0):
        raise UsageError("Псевдосфера (sech u cos v, sech u sin v, u - tanh u) регулярна только при u > 0")
    sech = 1.0 / np.cosh(u)
    return sech * np.cos(v), sech * np.sin(v), u - np.tanh(u)


def sphere(u, v, params):
    """Сфера: u - широта, v - долгота; все точки омбилические."""
    R = _positive(params, "R", 1.0)
    return R * np.cos(u) * np.cos(v), R * np.cos(u) * np.sin(v), R * np.sin(u)


def spheroid(u, v, params):
    """Эллипсоид вращения с экваториальной полуосью a и полярной c."""
    a = _positive(params, "a", 1.0)
    c = _positive(params, "c", 0.5)
    return a * np.cos(u) * np.cos(v), a * np.cos(u) * np.sin(v), c * np.sin(u)


NAMED_SURFACES = {
    "plane": plane,
    "cylinder": cylinder,
    "torus": torus,
    "catenoid": catenoid,
    "stretched_catenoid": stretched_catenoid,
    "pseudosphere": pseudosphere,
    "sphere": sphere,
    "spheroid": spheroid,
}


def named_surface(name: str, params: dict, spec: GridSpec) -> SurfaceGrid:
    """
    Аналитическая поверхность по имени.

    :param name: Одно из NAMED_SURFACES.
    :param params: Параметры (r, R, c, a).
    :param spec: Сетка параметров.
    :return: SurfaceGrid.
    :raises UnknownSurfaceError: Если имя неизвестно.
    :raises UsageError: Если параметры недопустимы.
    """
    if name not in NAMED_SURFACES:
        raise UnknownSurfaceError(f"Неизвестная поверхность '{name}', допустимы: {', '.join(NAMED_SURFACES)}")
    params = dict(params or {})
    logger.debug(f"Строим поверхность {name} с параметрами {params} на сетке {spec.nu}x{spec.nv}")
    return SurfaceGrid.from_function(lambda uu, vv: NAMED_SURFACES[name](uu, vv, params), spec)
