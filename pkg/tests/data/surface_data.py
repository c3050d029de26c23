from weingarten.generators.named import named_surface
from weingarten.geometry.grid import GridSpec


class SurfaceData:
    """
    Вспомогательный класс для построения аналитических поверхностей на сетке.
    """

    def __init__(
        self,
        name: str = "cylinder",
        params: dict = None,
        u_range: tuple = (0.0, 0.4),
        v_range: tuple = (0.0, 0.4),
        step: float = 0.01,
    ):
        """
        :param name: Имя поверхности из NAMED_SURFACES (по умолчанию cylinder).
        :param params: Параметры поверхности.
        :param u_range: Диапазон параметра u.
        :param v_range: Диапазон параметра v.
        :param step: Шаг сетки по обеим осям.
        """
        self.name = name
        self.params = dict(params or {})
        self.u_range = u_range
        self.v_range = v_range
        self.step = step
        self.spec = GridSpec(
            nu=int(round((u_range[1] - u_range[0]) / step)) + 1,
            nv=int(round((v_range[1] - v_range[0]) / step)) + 1,
            u0=u_range[0],
            v0=v_range[0],
            du=step,
            dv=step,
        )

        self.data = {
            "name": self.name,
            "params": self.params,
            "nu": self.spec.nu,
            "nv": self.spec.nv,
        }

    def grid(self):
        return named_surface(self.name, self.params, self.spec)

    def node(self, u: float, v: float) -> tuple:
        """Индексы узла, ближайшего к точке (u, v)."""
        i = int(round((u - self.spec.u0) / self.spec.du))
        j = int(round((v - self.spec.v0) / self.spec.dv))
        return i, j

    def cli_grid(self) -> list:
        """Аргументы --grid и --origin для командной строки."""
        return [
            "--grid", f"{self.spec.nu},{self.spec.nv},{self.spec.du},{self.spec.dv}",
            "--origin", f"{self.spec.u0},{self.spec.v0}",
        ]
