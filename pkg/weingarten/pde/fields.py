import logging
from dataclasses import dataclass

import numpy as np

from weingarten.errors import ParseError
from weingarten.geometry.grid import GridSpec
from weingarten.geometry.io import read_table, write_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalarField2D:
    """
    Скалярное поле lambda(x, y) на равномерной сетке.

    Ось x соответствует параметру u, ось y параметру v.
    """

    spec: GridSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.spec.nu, self.spec.nv):
            raise ValueError(f"Форма поля {values.shape} не совпадает с сеткой ({self.spec.nu}, {self.spec.nv})")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, func, spec: GridSpec) -> "ScalarField2D":
        xx, yy = spec.mesh()
        return cls(spec=spec, values=np.broadcast_to(func(xx, yy), xx.shape).astype(float))

    @property
    def nx(self) -> int:
        return self.spec.nu

    @property
    def ny(self) -> int:
        return self.spec.nv

    @property
    def dx(self) -> float:
        return self.spec.du

    @property
    def dy(self) -> float:
        return self.spec.dv

    @property
    def x(self) -> np.ndarray:
        return self.spec.u

    @property
    def y(self) -> np.ndarray:
        return self.spec.v

    def with_values(self, values) -> "ScalarField2D":
        return ScalarField2D(spec=self.spec, values=values)

    def header(self) -> dict:
        return {"nx": self.nx, "ny": self.ny, "x0": self.spec.u0, "y0": self.spec.v0, "dx": self.dx, "dy": self.dy}

    def save(self, path):
        """Сохраняет поле: JSON-заголовок {nx,ny,x0,y0,dx,dy} и строки ``i,j,value``."""
        return write_table(path, self.header(), self.values[..., None])

    @classmethod
    def load(cls, path) -> "ScalarField2D":
        """
        :raises ParseError: Если формат нарушен.
        """
        header, values = read_table(path, ("nx", "ny"), ("x0", "y0", "dx", "dy"), width=1)
        try:
            spec = GridSpec(nu=int(header["nx"]), nv=int(header["ny"]), u0=header["x0"], v0=header["y0"],
                            du=header["dx"], dv=header["dy"])
        except ValueError as exc:
            raise ParseError(f"{path}: {exc}") from exc
        logger.info(f"Загружено поле {path} ({spec.nu}x{spec.nv})")
        return cls(spec=spec, values=values[..., 0])
