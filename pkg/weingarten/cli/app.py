import argparse
import logging
import sys

from weingarten.cli.commands import COMMAND_HANDLERS
from weingarten.cli.config import COMMANDS, EXPORT_FORMATS, GENERATE_KINDS, build_config
from weingarten.cli.reports import write_report
from weingarten.configuration import configure_logging
from weingarten.errors import WeingartenError
from weingarten.utils.step_logger import StepLogger

logger = logging.getLogger(__name__)

HELP = {
    "analyze": "кривизны, невязки и подобранное соотношение поверхности из файла",
    "classify": "базовый класс линейного соотношения",
    "generate": "построение поверхности",
    "parallel": "параллельный сдвиг поверхности",
    "residual": "невязка натурального уравнения строки",
    "solve": "решение натурального уравнения строки",
    "export": "перевод поверхности в csv/json/obj",
    "pipeline": "сквозной пример для строки 1..10",
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON-файл конфигурации (флаги имеют приоритет)")
    parser.add_argument("--in", dest="input", help="входной файл")
    parser.add_argument("--out", dest="output", help="выходной файл или каталог")
    parser.add_argument("--report", help="файл JSON-отчёта (по умолчанию stdout)")
    parser.add_argument("--grid", help="сетка nx,ny,dx,dy")
    parser.add_argument("--origin", help="начало сетки x0,y0")
    parser.add_argument("--row", type=int, help="строка классификации 1..10")
    parser.add_argument("--param", action="append", metavar="KEY=VALUE", help="параметр (можно повторять)")
    for name in ("alpha", "beta", "gamma", "delta"):
        parser.add_argument(f"--{name}", type=float, help=f"коэффициент {name} соотношения delta K = alpha H + beta H' + gamma")
    parser.add_argument("--eps", type=int, choices=(-1, 1), help="знак eps параллельного сдвига")
    parser.add_argument("--a", dest="offset", type=float, help="расстояние параллельного сдвига")
    parser.add_argument("--kind", choices=GENERATE_KINDS, help="вид генератора")
    parser.add_argument("--name", help="имя аналитической поверхности")
    parser.add_argument("--pair", help="JSON-файл пары Вайнгартена")
    parser.add_argument("--tol", action="append", metavar="NAME=VALUE", help="переопределение допуска")
    parser.add_argument("--format", choices=EXPORT_FORMATS, help="формат вывода поверхности")
    parser.add_argument("--log-level", help="уровень логирования (иначе LOG_LEVEL)")
    parser.add_argument("--log-file", help="файл, в который дублируется лог")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weingarten", description="Натуральные уравнения поверхностей Вайнгартена")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        _add_common(subparsers.add_parser(command, help=HELP[command]))
    return parser


def main(argv=None) -> int:
    """
    Точка входа командной строки.

    :return: Код возврата: 0 - успех, 2 - ошибка использования, 3 - численная ошибка, 4 - ошибка ввода-вывода.
    """
    args = build_parser().parse_args(argv)
    try:
        configure_logging(args.log_level, args.log_file)
        config = build_config(args)
        with StepLogger(f"Команда {config.command}"):
            report = COMMAND_HANDLERS[config.command](config)
        text = write_report(report, config.report)
    except WeingartenError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return exc.exit_code
    if config.report is None:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
