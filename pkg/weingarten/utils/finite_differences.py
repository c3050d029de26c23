"""
Разностные производные второго порядка на равномерной сетке.

Во внутренних узлах используются центральные разности, на границе
односторонние формулы того же порядка.
"""
import numpy as np


def first_derivative(values: np.ndarray, step: float, axis: int) -> np.ndarray:
    """
    Первая производная вдоль оси.

    :param values: Массив значений (скалярных или векторных по последней оси).
    :param step: Шаг сетки вдоль оси.
    :param axis: Ось дифференцирования (0 = u/x, 1 = v/y).
    :return: Массив той же формы.
    """
    return np.gradient(values, step, axis=axis, edge_order=2)


def second_derivative(values: np.ndarray, step: float, axis: int) -> np.ndarray:
    """
    Вторая производная вдоль оси: трёхточечный шаблон внутри,
    четырёхточечный односторонний на границе.

    :param values: Массив значений.
    :param step: Шаг сетки вдоль оси.
    :param axis: Ось дифференцирования.
    :return: Массив той же формы.
    """
    f = np.moveaxis(np.asarray(values, dtype=float), axis, 0)
    if f.shape[0] < 4:
        raise ValueError("Для второй производной нужно не меньше 4 узлов вдоль оси")
    out = np.empty_like(f)
    out[1:-1] = f[2:] - 2.0 * f[1:-1] + f[:-2]
    out[0] = 2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]
    out[-1] = 2.0 * f[-1] - 5.0 * f[-2] + 4.0 * f[-3] - f[-4]
    return np.moveaxis(out / step**2, 0, axis)


def mixed_derivative(values: np.ndarray, du: float, dv: float) -> np.ndarray:
    """Смешанная производная f_uv как композиция центральных разностей."""
    return first_derivative(first_derivative(values, du, 0), dv, 1)


def interior(values: np.ndarray) -> np.ndarray:
    """Внутренние узлы двумерного поля."""
    return values[1:-1, 1:-1]
