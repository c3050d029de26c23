import logging
from dataclasses import dataclass

import numpy as np

from weingarten.errors import DegenerateRelationError, UsageError
from weingarten.geometry.fields import CurvatureField, ResidualField
from weingarten.natural.pairs import WeingartenPair, moebius_pair

logger = logging.getLogger(__name__)

DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class LinearRelation:
    """
    Линейное соотношение между инвариантами: delta K = alpha H + beta H' + gamma.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, float(getattr(self, name)))
        scale = max(abs(self.alpha), abs(self.beta), abs(self.gamma), abs(self.delta))
        if scale == 0.0:
            raise DegenerateRelationError("Все коэффициенты соотношения равны нулю")
        if abs(self.discriminant) <= DEGENERACY_TOL * scale**2:
            raise DegenerateRelationError(
                f"Дискриминант alpha^2 - beta^2 + 4 gamma delta равен нулю для {self.as_tuple()}"
            )

    @property
    def discriminant(self) -> float:
        return self.alpha**2 - self.beta**2 + 4.0 * self.gamma * self.delta

    @property
    def is_linear(self) -> bool:
        """Случай delta = 0 (соотношение между H, H' без K)."""
        return self.delta == 0.0

    def as_tuple(self) -> tuple:
        return self.alpha, self.beta, self.gamma, self.delta

    def scaled(self, factor: float) -> "LinearRelation":
        return LinearRelation(*(factor * c for c in self.as_tuple()))

    def normalized(self) -> "LinearRelation":
        """delta = 1 при delta != 0, иначе alpha = 1 при alpha != 0."""
        if self.delta != 0.0:
            return self.scaled(1.0 / self.delta)
        if self.alpha != 0.0:
            return self.scaled(1.0 / self.alpha)
        return self

    def residual(self, K, H, Hprime):
        return self.delta * K - self.alpha * H - self.beta * Hprime - self.gamma

    def describe(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma, "delta": self.delta}

    def __str__(self):
        return f"{self.delta:g} K = {self.alpha:g} H + {self.beta:g} H' + {self.gamma:g}"


@dataclass(frozen=True)
class MoebiusCoeffs:
    """
    Дробно-линейная форма соотношения: nu1 = (A nu2 + B) / (C nu2 + D).
    """

    A: float
    B: float
    C: float
    D: float

    def __post_init__(self):
        if self.B * self.C - self.A * self.D == 0.0:
            raise DegenerateRelationError(f"BC - AD = 0 для коэффициентов {self.as_tuple()}")

    def as_tuple(self) -> tuple:
        return self.A, self.B, self.C, self.D

    def __call__(self, nu):
        nu = np.asarray(nu, dtype=float)
        return (self.A * nu + self.B) / (self.C * nu + self.D)


def relation_from_moebius(m: MoebiusCoeffs) -> LinearRelation:
    """alpha = A - D, beta = -(A + D), gamma = B, delta = C."""
    return LinearRelation(alpha=m.A - m.D, beta=-(m.A + m.D), gamma=m.B, delta=m.C)


def moebius_from_relation(rel: LinearRelation) -> MoebiusCoeffs:
    """A = (alpha - beta)/2, D = -(alpha + beta)/2, B = gamma, C = delta."""
    return MoebiusCoeffs(A=0.5 * (rel.alpha - rel.beta), B=rel.gamma, C=rel.delta, D=-0.5 * (rel.alpha + rel.beta))


def check_relation(cf: CurvatureField, rel: LinearRelation) -> ResidualField:
    """
    Невязка delta K - alpha H - beta H' - gamma в узлах сетки.

    :param cf: Поле кривизн.
    :param rel: Соотношение.
    :return: ResidualField (итоги по внутренним узлам).
    """
    residual = ResidualField.from_values(rel.residual(cf.K, cf.H, cf.Hprime))
    logger.info(f"Проверка соотношения {rel}: max = {residual.max_abs:.3e}")
    return residual


def parallel_relation(rel: LinearRelation, a: float, eps: int, linear_case: bool = None) -> LinearRelation:
    """
    Соотношение для параллельной поверхности S_bar(a):
    (delta - a alpha - a^2 gamma) K_bar = eps (alpha + 2 a gamma) H_bar + eps beta H'_bar + gamma.

    При delta = 0 это соотношение линейного случая, при delta = 1 дробно-линейного.

    :param rel: Исходное соотношение.
    :param a: Расстояние сдвига (ненулевое).
    :param eps: Знак sign((1 - a nu1)(1 - a nu2)) на рассматриваемом куске поверхности.
    :param linear_case: Если задан, проверяется соответствие delta = 0.
    :return: LinearRelation.
    :raises UsageError: Если a = 0, eps не равен +-1 или linear_case не согласован с delta.
    :raises DegenerateRelationError: Если дискриминант результата равен нулю.
    """
    if a == 0:
        raise UsageError("Расстояние сдвига a должно быть ненулевым")
    if eps not in (-1, 1):
        raise UsageError(f"eps должно быть +1 или -1, получено {eps}")
    if linear_case is not None and linear_case != rel.is_linear:
        raise UsageError(f"Флаг линейного случая ({linear_case}) не согласован с delta = {rel.delta:g}")
    alpha, beta, gamma, delta = rel.as_tuple()
    return LinearRelation(
        alpha=eps * (alpha + 2.0 * a * gamma),
        beta=eps * beta,
        gamma=gamma,
        delta=delta - a * alpha - a**2 * gamma,
    )


@dataclass(frozen=True)
class RelationFit:
    relation: LinearRelation
    residual: ResidualField
    singular_values: tuple


def fit_relation(cf: CurvatureField, snap: float = 0.0) -> RelationFit:
    """
    Подбор (alpha, beta, gamma, delta) методом наименьших квадратов по внутренним узлам:
    правый сингулярный вектор матрицы [-H, -H', -1, K] с наименьшим сингулярным числом.

    Вектор делится на наибольший по модулю коэффициент; коэффициенты с модулем не больше snap
    обнуляются.

    :param cf: Поле кривизн.
    :param snap: Порог обнуления малых коэффициентов.
    :raises DegenerateRelationError: Если найденное соотношение вырождено.
    """
    core = (slice(1, -1), slice(1, -1))
    K, H, Hp = cf.K[core].ravel(), cf.H[core].ravel(), cf.Hprime[core].ravel()
    matrix = np.column_stack([-H, -Hp, -np.ones_like(K), K])
    _, singular, vt = np.linalg.svd(matrix, full_matrices=False)
    vector = vt[-1] / vt[-1][int(np.argmax(np.abs(vt[-1])))]
    vector[np.abs(vector) <= snap] = 0.0
    relation = LinearRelation(*vector)
    residual = ResidualField.from_values(relation.residual(cf.K, cf.H, cf.Hprime))
    logger.info(f"Подобрано соотношение {relation}, невязка {residual.max_abs:.3e}")
    return RelationFit(relation=relation, residual=residual, singular_values=tuple(float(s) for s in singular))


def relation_pair(rel: LinearRelation, interval) -> WeingartenPair:
    """Пара Вайнгартена соотношения: g = nu, f = (A nu + B)/(C nu + D)."""
    m = moebius_from_relation(rel)
    return moebius_pair(m.A, m.B, m.C, m.D, interval, kind="linear-fractional", params=rel.describe())
