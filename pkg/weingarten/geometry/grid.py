import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from weingarten.errors import DataIOError, ParseError
from weingarten.geometry.io import read_table, write_table

logger = logging.getLogger(__name__)

MIN_NODES = 5


@dataclass(frozen=True)
class GridSpec:
    """
    Равномерная прямоугольная сетка параметров (u, v).
    """

    nu: int
    nv: int
    u0: float = 0.0
    v0: float = 0.0
    du: float = 0.01
    dv: float = 0.01

    def __post_init__(self):
        if self.nu < MIN_NODES or self.nv < MIN_NODES:
            raise ValueError(f"Сетка должна иметь не меньше {MIN_NODES} узлов по каждой оси: {self.nu}x{self.nv}")
        if self.du <= 0 or self.dv <= 0:
            raise ValueError(f"Шаги сетки должны быть положительными: du={self.du}, dv={self.dv}")

    @classmethod
    def spanning(cls, u_range, v_range, nu: int, nv: int) -> "GridSpec":
        """
        Сетка, покрывающая прямоугольник [u_min, u_max] x [v_min, v_max].

        :param u_range: (u_min, u_max).
        :param v_range: (v_min, v_max).
        :param nu: Число узлов по u.
        :param nv: Число узлов по v.
        :return: GridSpec.
        """
        return cls(
            nu=nu,
            nv=nv,
            u0=float(u_range[0]),
            v0=float(v_range[0]),
            du=(u_range[1] - u_range[0]) / (nu - 1),
            dv=(v_range[1] - v_range[0]) / (nv - 1),
        )

    @property
    def u(self) -> np.ndarray:
        return self.u0 + self.du * np.arange(self.nu)

    @property
    def v(self) -> np.ndarray:
        return self.v0 + self.dv * np.arange(self.nv)

    def mesh(self):
        """Двумерные массивы параметров (индексация ij)."""
        return np.meshgrid(self.u, self.v, indexing="ij")

    def refined(self, factor: int = 2) -> "GridSpec":
        """Сетка на той же области с шагом, уменьшенным в factor раз."""
        return GridSpec(
            nu=(self.nu - 1) * factor + 1,
            nv=(self.nv - 1) * factor + 1,
            u0=self.u0,
            v0=self.v0,
            du=self.du / factor,
            dv=self.dv / factor,
        )

    def header(self) -> dict:
        return {"nu": self.nu, "nv": self.nv, "u0": self.u0, "v0": self.v0, "du": self.du, "dv": self.dv}


@dataclass(frozen=True)
class SurfaceGrid:
    """
    Дискретная параметрическая поверхность z(u, v) на равномерной сетке.

    points имеет форму (nu, nv, 3).
    """

    spec: GridSpec
    points: np.ndarray

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        if points.shape != (self.spec.nu, self.spec.nv, 3):
            raise ValueError(
                f"Форма массива точек {points.shape} не совпадает с сеткой ({self.spec.nu}, {self.spec.nv}, 3)"
            )
        if not np.all(np.isfinite(points)):
            raise ValueError("Координаты поверхности содержат нечисловые значения")
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @classmethod
    def from_function(cls, func, spec: GridSpec) -> "SurfaceGrid":
        """
        Дискретизирует параметризацию.

        :param func: Векторизованная функция (U, V) -> (x, y, z).
        :param spec: Сетка параметров.
        :return: SurfaceGrid.
        """
        uu, vv = spec.mesh()
        x, y, z = func(uu, vv)
        points = np.stack(np.broadcast_arrays(x, y, z), axis=-1)
        return cls(spec=spec, points=points)

    @property
    def nu(self) -> int:
        return self.spec.nu

    @property
    def nv(self) -> int:
        return self.spec.nv

    @property
    def diameter(self) -> float:
        """Диаметр облака точек, масштаб для относительных допусков."""
        flat = self.points.reshape(-1, 3)
        return float(np.linalg.norm(flat.max(axis=0) - flat.min(axis=0)))

    def transposed(self) -> "SurfaceGrid":
        """Поверхность с переставленными ролями параметров u и v."""
        spec = GridSpec(
            nu=self.spec.nv, nv=self.spec.nu, u0=self.spec.v0, v0=self.spec.u0, du=self.spec.dv, dv=self.spec.du
        )
        return SurfaceGrid(spec=spec, points=np.transpose(self.points, (1, 0, 2)).copy())

    def moved(self, rotation: np.ndarray, translation=(0.0, 0.0, 0.0)) -> "SurfaceGrid":
        """Образ поверхности при движении x -> R x + t."""
        points = self.points @ np.asarray(rotation, dtype=float).T + np.asarray(translation, dtype=float)
        return SurfaceGrid(spec=self.spec, points=points)

    def save(self, path) -> Path:
        """
        Сохраняет сетку: JSON-заголовок {nu,nv,u0,v0,du,dv} и строки ``i,j,x,y,z``.

        :param path: Путь к файлу.
        :return: Путь к записанному файлу.
        """
        return write_table(path, self.spec.header(), self.points)

    @classmethod
    def load(cls, path) -> "SurfaceGrid":
        """
        Загружает сетку из файла.

        :param path: Путь к файлу.
        :return: SurfaceGrid.
        :raises ParseError: Если формат или размеры сетки нарушены.
        """
        header, values = read_table(path, ("nu", "nv"), ("u0", "v0", "du", "dv"), width=3)
        try:
            spec = GridSpec(
                nu=int(header["nu"]), nv=int(header["nv"]), u0=header["u0"], v0=header["v0"],
                du=header["du"], dv=header["dv"],
            )
        except ValueError as exc:
            raise ParseError(f"{path}: {exc}") from exc
        logger.info(f"Загружена поверхность {path} ({spec.nu}x{spec.nv})")
        return cls(spec=spec, points=values)

    def export_obj(self, path) -> Path:
        """
        Экспорт в Wavefront OBJ: вершины и четырёхугольные грани (индексы с 1).

        :param path: Путь к файлу.
        :return: Путь к записанному файлу.
        """
        path = Path(path)
        nu, nv = self.nu, self.nv
        try:
            with path.open("w", encoding="utf-8") as handle:
                handle.write(f"# weingarten surface {nu}x{nv}\n")
                for x, y, z in self.points.reshape(-1, 3):
                    handle.write(f"v {x:.10g} {y:.10g} {z:.10g}\n")
                for i in range(nu - 1):
                    for j in range(nv - 1):
                        a = i * nv + j + 1
                        b = (i + 1) * nv + j + 1
                        handle.write(f"f {a} {b} {b + 1} {a + 1}\n")
        except OSError as exc:
            raise DataIOError(f"Не удалось записать OBJ {path}: {exc}") from exc
        logger.info(f"Экспортирован OBJ {path}")
        return path
