from dataclasses import dataclass

import numpy as np

from weingarten.geometry.grid import GridSpec
from weingarten.utils.finite_differences import first_derivative, second_derivative


@dataclass(frozen=True)
class NuField:
    """
    Геометрическая функция nu(u, v) на равномерной сетке.
    """

    spec: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.spec.nu, self.spec.nv):
            raise ValueError(f"Форма поля {values.shape} не совпадает с сеткой ({self.spec.nu}, {self.spec.nv})")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, func, spec: GridSpec) -> "NuField":
        uu, vv = spec.mesh()
        return cls(spec=spec, values=np.broadcast_to(func(uu, vv), uu.shape).astype(float))

    def derivatives(self):
        """(nu_u, nu_v, nu_uu, nu_vv) разностями второго порядка."""
        du, dv = self.spec.du, self.spec.dv
        return (
            first_derivative(self.values, du, 0),
            first_derivative(self.values, dv, 1),
            second_derivative(self.values, du, 0),
            second_derivative(self.values, dv, 1),
        )

    def degenerate_nodes(self, tol: float = 1e-14) -> list:
        """Узлы, в которых градиент nu обращается в ноль (допустимо, но отмечается)."""
        nu_u = first_derivative(self.values, self.spec.du, 0)
        nu_v = first_derivative(self.values, self.spec.dv, 1)
        return [(int(i), int(j)) for i, j in np.argwhere(np.hypot(nu_u, nu_v) <= tol)]

    def shifted(self, du_shift: float, dv_shift: float) -> "NuField":
        """То же поле на сетке со сдвинутым началом параметров."""
        spec = GridSpec(
            nu=self.spec.nu, nv=self.spec.nv, u0=self.spec.u0 + du_shift, v0=self.spec.v0 + dv_shift,
            du=self.spec.du, dv=self.spec.dv,
        )
        return NuField(spec=spec, values=self.values)
