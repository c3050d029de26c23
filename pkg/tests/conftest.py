import os
from pathlib import Path

from dotenv import dotenv_values

env_vars = dotenv_values(Path(__file__).resolve().parent.parent / "weingarten" / "configuration" / "example.env")
for key, value in env_vars.items():
    if value is not None:
        os.environ.setdefault(key, value)

import pytest

from tests.utils.utils import read_report
from weingarten.cli import main


@pytest.fixture
def run_cli(tmp_path):
    """
    Запускает командную строку с отчётом во временном файле.

    :return: Функция (аргументы) -> (код возврата, отчёт или None).
    """
    def run(*argv):
        report = tmp_path / "report.json"
        if report.exists():
            report.unlink()
        code = main([*argv, "--report", str(report)])
        return code, (read_report(report) if report.exists() else None)
    return run
