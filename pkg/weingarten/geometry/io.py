"""
Табличный формат файлов: первая строка содержит JSON-заголовок,
далее CSV-строки ``i,j,<значения>`` в порядке i-major.
"""
import json
import logging
from pathlib import Path

import numpy as np

from weingarten.errors import DataIOError, ParseError

logger = logging.getLogger(__name__)


def write_table(path, header: dict, values: np.ndarray) -> Path:
    """
    Записывает поле на сетке в файл.

    :param path: Путь к файлу.
    :param header: Заголовок (размеры сетки, шаги).
    :param values: Массив формы (n1, n2, k).
    :return: Путь к записанному файлу.
    :raises DataIOError: Если запись не удалась.
    """
    path = Path(path)
    n1, n2, k = values.shape
    ii, jj = np.meshgrid(np.arange(n1), np.arange(n2), indexing="ij")
    body = np.column_stack([ii.ravel(), jj.ravel(), values.reshape(n1 * n2, k)])
    int_fmt = ["%d", "%d"] + ["%.17g"] * k
    try:
        with path.open("w", encoding="utf-8") as handle:
            handle.write(json.dumps(header, sort_keys=True) + "\n")
            np.savetxt(handle, body, delimiter=",", fmt=int_fmt)
    except OSError as exc:
        raise DataIOError(f"Не удалось записать файл {path}: {exc}") from exc
    logger.debug(f"Записан файл {path} ({n1}x{n2}, {k} канала)")
    return path


def read_table(path, shape_keys: tuple, float_keys: tuple, width: int):
    """
    Читает поле на сетке из файла.

    :param path: Путь к файлу.
    :param shape_keys: Ключи заголовка с размерами сетки.
    :param float_keys: Ключи заголовка с вещественными параметрами.
    :param width: Число значений в строке после индексов i, j.
    :return: (header, массив формы (n1, n2, width)).
    :raises DataIOError: Если файл не читается.
    :raises ParseError: Если формат нарушен.
    """
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            first = handle.readline()
            try:
                header = json.loads(first)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: некорректный JSON-заголовок: {exc}") from exc
            try:
                body = np.loadtxt(handle, delimiter=",", ndmin=2)
            except ValueError as exc:
                raise ParseError(f"{path}: некорректное тело CSV: {exc}") from exc
    except OSError as exc:
        raise DataIOError(f"Не удалось прочитать файл {path}: {exc}") from exc

    if not isinstance(header, dict):
        raise ParseError(f"{path}: заголовок должен быть JSON-объектом")
    missing = [key for key in shape_keys + float_keys if key not in header]
    if missing:
        raise ParseError(f"{path}: в заголовке нет ключей {missing}")
    try:
        n1, n2 = (int(header[key]) for key in shape_keys)
        for key in float_keys:
            header[key] = float(header[key])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: некорректные значения заголовка: {exc}") from exc

    if body.shape != (n1 * n2, width + 2):
        raise ParseError(
            f"{path}: ожидалось {n1 * n2} строк по {width + 2} значений, получено {body.shape}"
        )
    ii = body[:, 0].astype(int)
    jj = body[:, 1].astype(int)
    expected_i, expected_j = np.meshgrid(np.arange(n1), np.arange(n2), indexing="ij")
    if not (np.array_equal(ii, expected_i.ravel()) and np.array_equal(jj, expected_j.ravel())):
        raise ParseError(f"{path}: индексы узлов нарушают порядок i-major")
    if not np.all(np.isfinite(body[:, 2:])):
        raise ParseError(f"{path}: в данных есть нечисловые значения")
    return header, body[:, 2:].reshape(n1, n2, width)
