import numpy as np


def rk4_step(rhs, t: float, state: np.ndarray, h: float) -> np.ndarray:
    """
    Один шаг классического метода Рунге-Кутты четвёртого порядка.

    :param rhs: Правая часть rhs(t, state).
    :param t: Текущее значение параметра.
    :param state: Текущее состояние.
    :param h: Шаг.
    :return: Состояние в точке t + h.
    """
    k1 = rhs(t, state)
    k2 = rhs(t + 0.5 * h, state + 0.5 * h * k1)
    k3 = rhs(t + 0.5 * h, state + 0.5 * h * k2)
    k4 = rhs(t + h, state + h * k3)
    return state + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


def orthonormalize(frame: np.ndarray) -> np.ndarray:
    """
    Грам-Шмидт для правого репера (строки: X, Y, l); допускается пакет формы (..., 3, 3).

    Третий вектор пересчитывается как векторное произведение,
    чтобы сохранить ориентацию.
    """
    frame = np.asarray(frame, dtype=float)
    x = frame[..., 0, :] / np.linalg.norm(frame[..., 0, :], axis=-1, keepdims=True)
    y = frame[..., 1, :] - np.sum(frame[..., 1, :] * x, axis=-1, keepdims=True) * x
    y = y / np.linalg.norm(y, axis=-1, keepdims=True)
    return np.stack([x, y, np.cross(x, y)], axis=-2)


def orthonormality_defect(frame: np.ndarray) -> float:
    """Максимальное отклонение F F^T от единичной матрицы (по всему пакету)."""
    frame = np.asarray(frame, dtype=float)
    gram = frame @ np.swapaxes(frame, -1, -2)
    return float(np.max(np.abs(gram - np.eye(3))))
