import json
import logging
import math
from pathlib import Path

import numpy as np

from weingarten.errors import DataIOError

logger = logging.getLogger(__name__)


def to_jsonable(value):
    """Приводит отчёт к типам JSON; NaN и бесконечности заменяются на None."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, Path):
        return str(value)
    return value


def render_report(report: dict) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2, ensure_ascii=False)


def write_report(report: dict, path=None) -> str:
    """
    Сериализует отчёт в JSON с отсортированными ключами; при заданном пути пишет файл.

    :return: Текст отчёта.
    :raises DataIOError: Если файл не записывается.
    """
    text = render_report(report)
    if path is not None:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text + "\n", encoding="utf-8")
        except OSError as exc:
            raise DataIOError(f"Не удалось записать отчёт {path}: {exc}") from exc
        logger.info(f"Отчёт записан в {path}")
    return text
