import logging
import math
from dataclasses import dataclass, field
from typing import Optional

from weingarten.errors import DegenerateRelationError, NumericalError, UsageError
from weingarten.linear.relation import LinearRelation, parallel_relation

logger = logging.getLogger(__name__)

ROWS = tuple(range(1, 11))
REDUCTION_TOL = 1e-9

# Соотношения базовых классов в виде H, H', K.
ROW_TITLES = {
    1: "H = 0",
    2: "H = 1/2",
    3: "H' = 1",
    4: "H = beta H', beta^2 > 1",
    5: "H = beta H', beta^2 < 1, beta != 0",
    6: "H = beta H' + 1, beta^2 > 1",
    7: "H = beta H' + 1, beta^2 < 1, beta != 0",
    8: "K = -1",
    9: "K = 2 H'",
    10: "K = beta H' + gamma, beta != 0, gamma < 0",
}

DEFAULT_PARAMS = {
    4: {"beta": 3.0},
    5: {"beta": 0.5},
    6: {"beta": 3.0},
    7: {"beta": 0.5},
    10: {"beta": 1.0, "gamma": -1.0},
}


@dataclass(frozen=True)
class BasicClassId:
    """
    Базовый класс (строка 1..10) с рецептом приведения:
    параллельный сдвиг на offset и подобие с коэффициентом scale.
    """

    row: int
    params: dict = field(default_factory=dict)
    offset: Optional[float] = None
    scale: Optional[float] = None
    epsilon: int = 1

    def __post_init__(self):
        if self.row not in ROWS:
            raise UsageError(f"Номер строки должен быть от 1 до 10, получено {self.row}")
        beta = self.params.get("beta")
        if self.row in (4, 6) and not beta**2 > 1:
            raise UsageError(f"Строка {self.row} требует beta^2 > 1, получено beta = {beta}")
        if self.row in (5, 7) and not (beta**2 < 1 and beta != 0):
            raise UsageError(f"Строка {self.row} требует beta^2 < 1, beta != 0, получено beta = {beta}")
        if self.row == 10 and not (beta != 0 and self.params.get("gamma", 0.0) < 0):
            raise UsageError(f"Строка 10 требует beta != 0, gamma < 0, получено {self.params}")

    @property
    def title(self) -> str:
        return ROW_TITLES[self.row]

    def describe(self) -> dict:
        return {"row": self.row, "params": dict(self.params), "offset": self.offset, "scale": self.scale}


def basic_id(row: int, params: dict = None) -> BasicClassId:
    """Базовый класс без приведения с параметрами по умолчанию."""
    merged = dict(DEFAULT_PARAMS.get(row, {}))
    merged.update(params or {})
    return BasicClassId(row=row, params=merged)


def basic_relation(row: int, params: dict = None) -> LinearRelation:
    """
    Представительное соотношение базового класса.

    :param row: Номер строки 1..10.
    :param params: beta (строки 4-7, 9, 10), gamma (строка 10).
    :return: LinearRelation.
    """
    params = basic_id(row, params).params
    beta = params.get("beta")
    relations = {
        1: lambda: (1.0, 0.0, 0.0, 0.0),
        2: lambda: (1.0, 0.0, -0.5, 0.0),
        3: lambda: (0.0, -1.0, 1.0, 0.0),
        4: lambda: (1.0, -beta, 0.0, 0.0),
        5: lambda: (1.0, -beta, 0.0, 0.0),
        6: lambda: (1.0, -beta, -1.0, 0.0),
        7: lambda: (1.0, -beta, -1.0, 0.0),
        8: lambda: (0.0, 0.0, -1.0, 1.0),
        9: lambda: (0.0, 2.0, 0.0, 1.0),
        10: lambda: (0.0, beta, params["gamma"], 1.0),
    }
    return LinearRelation(*relations[row]())


def _classify_linear(rel: LinearRelation) -> BasicClassId:
    alpha, beta, gamma, _ = rel.as_tuple()
    if alpha == 0.0:
        if gamma == 0.0:
            raise DegenerateRelationError("Соотношение H' = 0 задаёт только омбилические поверхности")
        return BasicClassId(row=3, scale=-gamma / beta)
    beta, gamma = beta / alpha, gamma / alpha
    if gamma == 0.0:
        if beta == 0.0:
            return BasicClassId(row=1)
        p = -beta
        return BasicClassId(row=4 if p**2 > 1 else 5, params={"beta": p})
    if beta == 0.0:
        return BasicClassId(row=2, params={"H": -gamma}, scale=2.0 * abs(gamma))
    p = -beta
    return BasicClassId(row=6 if p**2 > 1 else 7, params={"beta": p}, scale=-gamma)


def _offset_root(alpha: float, gamma: float) -> float:
    if gamma == 0.0:
        return 1.0 / alpha
    root = math.sqrt(alpha**2 + 4.0 * gamma)
    candidates = ((-alpha + root) / (2.0 * gamma), (-alpha - root) / (2.0 * gamma))
    return min(candidates, key=lambda a: (abs(a), -a))


def classify(rel: LinearRelation, eps: int = 1) -> BasicClassId:
    """
    Относит соотношение к одному из десяти базовых классов.

    Ветвь delta = 0: alpha = 0 - строка 3; иначе (alpha = 1) строки 1, 2, 4-7.
    Ветвь delta = 1: alpha = gamma = 0 - строка 9; alpha^2 + 4 gamma >= 0 - сдвиг на корень
    gamma a^2 + alpha a - 1 = 0 с меньшим |a| и линейная ветвь; alpha^2 + 4 gamma < 0 - сдвиг на
    a = -alpha/(2 gamma), затем строка 8 (beta = 0) или 10.

    :param rel: Соотношение.
    :param eps: Знак eps для параллельного сдвига.
    :return: BasicClassId с рецептом приведения (offset = None, если сдвиг не нужен).
    :raises DegenerateRelationError: Если соотношение вырождено.
    """
    rel = rel.normalized()
    if rel.is_linear:
        result = _classify_linear(rel)
    else:
        alpha, beta, gamma, _ = rel.as_tuple()
        if alpha == 0.0 and gamma == 0.0:
            result = BasicClassId(row=9, scale=beta / 2.0)
        elif alpha**2 + 4.0 * gamma >= 0.0:
            a = _offset_root(alpha, gamma)
            reduced = parallel_relation(rel, a, eps)
            if abs(reduced.delta) > REDUCTION_TOL * max(abs(c) for c in reduced.as_tuple()):
                raise NumericalError(f"Сдвиг a = {a:.6g} не привёл соотношение к линейному случаю")
            linear = LinearRelation(reduced.alpha, reduced.beta, reduced.gamma, 0.0).normalized()
            base = _classify_linear(linear)
            result = BasicClassId(row=base.row, params=base.params, offset=a, scale=base.scale, epsilon=eps)
        else:
            a = -alpha / (2.0 * gamma)
            reduced = parallel_relation(rel, a, eps).normalized() if a != 0.0 else rel
            beta_r, gamma_r = reduced.beta, reduced.gamma
            offset = a if a != 0.0 else None
            if beta_r == 0.0:
                result = BasicClassId(row=8, params={"K": gamma_r}, offset=offset,
                                      scale=math.sqrt(-gamma_r), epsilon=eps)
            else:
                result = BasicClassId(row=10, params={"beta": beta_r, "gamma": gamma_r}, offset=offset,
                                      epsilon=eps)
    logger.info(f"Соотношение {rel} относится к строке {result.row} ({result.title}), сдвиг {result.offset}")
    return result
