import json
import logging
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional

from weingarten.configuration import DEFAULT_TOLERANCES, Tolerances
from weingarten.errors import DataIOError, ParseError, UsageError
from weingarten.geometry.grid import GridSpec

logger = logging.getLogger(__name__)

COMMANDS = ("analyze", "classify", "generate", "parallel", "residual", "solve", "export", "pipeline")
EXPORT_FORMATS = ("csv", "json", "obj")
GENERATE_KINDS = ("named", "gamma", "rotational", "relation", "reconstruct")

# Команды, которым нужен входной файл.
NEEDS_INPUT = {"analyze", "parallel", "export"}
# Параметры, значения которых - строки; остальные обязаны быть числами.
TEXT_PARAMS = {"boundary"}


@dataclass(frozen=True)
class RunConfig:
    """
    Конфигурация одного запуска командной строки.

    Значения собираются из JSON-файла (--config), поверх которого применяются флаги.
    """

    command: str
    input: Optional[Path] = None
    output: Optional[Path] = None
    report: Optional[Path] = None
    grid: Optional[GridSpec] = None
    row: Optional[int] = None
    params: dict = field(default_factory=dict)
    relation: Optional[tuple] = None
    eps: int = 1
    offset: Optional[float] = None
    kind: Optional[str] = None
    name: Optional[str] = None
    pair: Optional[Path] = None
    export_format: str = "csv"
    tolerances: Tolerances = DEFAULT_TOLERANCES

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"Неизвестная команда '{self.command}', допустимы: {', '.join(COMMANDS)}")
        if self.export_format not in EXPORT_FORMATS:
            raise UsageError(f"Неизвестный формат '{self.export_format}', допустимы: {', '.join(EXPORT_FORMATS)}")
        if self.kind is not None and self.kind not in GENERATE_KINDS:
            raise UsageError(f"Неизвестный вид генератора '{self.kind}', допустимы: {', '.join(GENERATE_KINDS)}")
        if self.eps not in (-1, 1):
            raise UsageError(f"eps должно быть +1 или -1, получено {self.eps}")
        for key, value in self.params.items():
            if key not in TEXT_PARAMS and (isinstance(value, bool) or not isinstance(value, (int, float))):
                raise UsageError(f"Параметр '{key}' должен быть числом, получено '{value}'")
        if self.command in NEEDS_INPUT and self.input is None:
            raise UsageError(f"Команде '{self.command}' нужен входной файл (--in)")
        for path in (self.input, self.pair):
            if path is not None and not Path(path).is_file():
                raise DataIOError(f"Входной файл не найден: {path}")

    def require(self, name: str):
        """
        :raises UsageError: Если параметр не задан.
        """
        value = getattr(self, name)
        if value is None:
            raise UsageError(f"Команде '{self.command}' нужен параметр '{name}'")
        return value


def parse_grid(text: str, origin: str = None) -> GridSpec:
    """
    Сетка из строки 'nx,ny,dx,dy' и необязательного начала 'x0,y0'.

    :raises UsageError: Если строка некорректна.
    """
    try:
        nx, ny, dx, dy = (item.strip() for item in text.split(","))
        x0, y0 = (float(item) for item in origin.split(",")) if origin else (0.0, 0.0)
        return GridSpec(nu=int(nx), nv=int(ny), u0=x0, v0=y0, du=float(dx), dv=float(dy))
    except ValueError as exc:
        raise UsageError(f"Некорректная сетка '{text}' (ожидается nx,ny,dx,dy): {exc}") from exc


def _number(text: str):
    try:
        return float(text)
    except ValueError:
        return text


def parse_assignments(items, what: str = "параметр") -> dict:
    """
    Разбирает список 'key=value'; числовые значения приводятся к float.

    :raises UsageError: Если элемент не содержит '='.
    """
    result = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"Некорректный {what} '{item}', ожидается key=value")
        result[key.strip()] = _number(value.strip())
    return result


def updated_tolerances(base: Tolerances, overrides: dict) -> Tolerances:
    """
    Переопределяет допуски с приведением целочисленных полей.

    :raises UsageError: Если имя допуска неизвестно или значение не положительно.
    """
    kinds = {f.name: type(getattr(base, f.name)) for f in fields(base)}
    try:
        typed = {key: kinds.get(key, float)(value) for key, value in overrides.items()}
        return base.updated(typed)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"Некорректные допуски {overrides}: {exc}") from exc


def load_config_file(path) -> dict:
    """
    JSON-файл конфигурации: ключи совпадают с полями RunConfig, 'tolerances' - объект.

    :raises DataIOError: Если файл не читается.
    :raises ParseError: Если файл не является JSON-объектом.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise DataIOError(f"Не удалось прочитать конфигурацию {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: некорректный JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: конфигурация должна быть JSON-объектом")
    logger.info(f"Загружена конфигурация {path}")
    return data


def _from_file(data: dict) -> dict:
    values = {}
    for key in ("input", "output", "report", "pair"):
        if data.get(key) is not None:
            values[key] = Path(data[key])
    for key in ("row", "eps"):
        if data.get(key) is not None:
            values[key] = int(data[key])
    for key in ("kind", "name", "export_format"):
        if data.get(key) is not None:
            values[key] = str(data[key])
    if data.get("offset") is not None:
        values["offset"] = float(data["offset"])
    if data.get("params") is not None:
        values["params"] = dict(data["params"])
    if data.get("relation") is not None:
        values["relation"] = tuple(float(c) for c in data["relation"])
    if data.get("grid") is not None:
        grid = data["grid"]
        values["grid"] = parse_grid(grid) if isinstance(grid, str) else GridSpec(**grid)
    return values


def build_config(args) -> RunConfig:
    """
    RunConfig из разобранных аргументов argparse.

    :raises UsageError: Если аргументы противоречивы.
    """
    data = load_config_file(args.config) if getattr(args, "config", None) else {}
    try:
        values = _from_file(data)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"Некорректное значение в конфигурации: {exc}") from exc
    tolerances = updated_tolerances(DEFAULT_TOLERANCES, data.get("tolerances", {}))

    for key in ("input", "output", "report", "pair"):
        value = getattr(args, key, None)
        if value is not None:
            values[key] = Path(value)
    for key in ("row", "offset", "kind", "name", "eps"):
        value = getattr(args, key, None)
        if value is not None:
            values[key] = value
    if getattr(args, "format", None):
        values["export_format"] = args.format
    if getattr(args, "grid", None):
        values["grid"] = parse_grid(args.grid, getattr(args, "origin", None))
    coefficients = [getattr(args, key, None) for key in ("alpha", "beta", "gamma", "delta")]
    if any(c is not None for c in coefficients):
        values["relation"] = tuple(0.0 if c is None else float(c) for c in coefficients)
    params = dict(values.get("params", {}))
    params.update(parse_assignments(getattr(args, "param", None)))
    values["params"] = params
    tolerances = updated_tolerances(tolerances, parse_assignments(getattr(args, "tol", None), "допуск"))
    config = RunConfig(command=args.command, tolerances=tolerances, **values)
    logger.debug(f"Конфигурация запуска: {config}")
    return config
