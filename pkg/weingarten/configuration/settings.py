import logging
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from dotenv import dotenv_values

from weingarten.errors import DataIOError

ENV_FILE = Path(__file__).with_name("example.env")
LOG_FORMAT = "%(asctime)s - %(message)s"


@dataclass(frozen=True)
class Tolerances:
    """
    Допуски и лимиты численных процедур.

    Все функции пакета принимают соответствующие значения явными
    именованными аргументами; здесь собраны значения по умолчанию.
    """

    regularity: float = 1e-10
    principal: float = 1e-6
    umbilic: float = 1e-8
    quadrature: float = 1e-10
    fit: float = 1e-3
    offset_guard: float = 1e-6
    reciprocal: float = 1e-8
    pair_samples: int = 1000
    newton_residual: float = 1e-10
    newton_update: float = 1e-12
    newton_max_iter: int = 200
    line_search_halvings: int = 30
    pde_reconstruct: float = 1e-6
    compatibility: float = 1e-3
    ode_step: float = 1e-3
    generator_check: float = 1e-2

    def updated(self, overrides: dict) -> "Tolerances":
        """
        Возвращает копию с переопределёнными полями.

        :param overrides: Словарь {имя поля: значение}.
        :return: Новый экземпляр Tolerances.
        :raises ValueError: Если поле неизвестно или значение не положительно.
        """
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"Неизвестные допуски: {sorted(unknown)}")
        for key, value in overrides.items():
            if value <= 0:
                raise ValueError(f"Допуск '{key}' должен быть положительным, получено {value}")
        return replace(self, **overrides)

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()


def load_environment(env_file: Path = ENV_FILE) -> None:
    """
    Загружает переменные из env-файла, не перезаписывая уже заданные.

    :param env_file: Путь к env-файлу.
    """
    env_vars = dotenv_values(env_file)
    for key, value in env_vars.items():
        if value is not None:
            os.environ.setdefault(key, value)


def configure_logging(level: str = None, log_file: str = None) -> None:
    """
    Настраивает корневой логгер в формате шагов.

    :param level: Уровень логирования; по умолчанию берётся из LOG_LEVEL.
    :param log_file: Файл, в который дублируется лог (флаг --log-file).
    :raises DataIOError: Если файл лога не открывается.
    """
    load_environment()
    level = (level or os.environ.get("LOG_LEVEL") or "INFO").upper()
    handlers = [logging.StreamHandler()]
    if log_file:
        try:
            handlers.append(logging.FileHandler(log_file, encoding="utf-8"))
        except OSError as exc:
            raise DataIOError(f"Не удалось открыть файл лога {log_file}: {exc}") from exc
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)
