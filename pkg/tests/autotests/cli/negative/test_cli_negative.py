import pytest

from tests.utils.custom_assertions import assert_equal, assert_is_none
from tests.utils.test_logger import TestMetadata
from weingarten.utils.step_logger import StepLogger


@pytest.mark.cli
@pytest.mark.smoke
@pytest.mark.negative
class TestCliNegative:
    """
    Коды возврата: 2 - ошибка использования, 3 - численная ошибка, 4 - ошибка ввода-вывода.
    """

    @pytest.fixture(autouse=True)
    def setup(self, run_cli, tmp_path):
        with StepLogger("Подготавливаем запуск командной строки"):
            self.run = run_cli
            self.tmp_path = tmp_path

    @pytest.mark.parametrize(
        "argv",
        [
            ("pipeline", "--row", "11"),
            ("analyze",),
            ("classify",),
            ("classify", "--alpha", "1", "--tol", "bogus=1"),
            ("classify", "--alpha", "1", "--tol", "fit=-1"),
            ("solve", "--row", "1", "--grid", "10,10,0.1"),
            ("residual", "--row", "4"),
            ("generate", "--kind", "gamma", "--param", "kappa=abc"),
            ("generate", "--kind", "rotational", "--param", "beta=x"),
            ("generate", "--kind", "named", "--name", "torus", "--param", "R=abc"),
        ],
        ids=["row11", "analyze_no_input", "classify_no_relation", "unknown_tolerance", "negative_tolerance",
             "bad_grid", "row4_no_exact", "gamma_text_param", "rotational_text_param", "named_text_param"],
    )
    @TestMetadata(
        name="Негативный кейс: ошибка использования возвращает код 2",
        id="78d547e2-c66e-49c1-847f-237d83fc2ab6"
    )
    def test_usage_errors(self, argv):
        with StepLogger(f"Запускаем {' '.join(argv)}"):
            code, report = self.run(*argv)

        with StepLogger("Проверяем код возврата и отсутствие отчёта"):
            assert_equal(code, 2)
            assert_is_none(report)

    @TestMetadata(
        name="Негативный кейс: вырожденное соотношение возвращает код 3",
        id="3b678552-6302-4df2-b3d7-3fb2613fe9cc"
    )
    def test_degenerate_relation(self):
        with StepLogger("Запускаем classify для H = H'"):
            code, _ = self.run("classify", "--alpha", "1", "--beta", "1")

        with StepLogger("Проверяем код возврата"):
            assert_equal(code, 3)

    @TestMetadata(
        name="Негативный кейс: самопроверка генератора не пройдена, код 3",
        id="f9f4e2eb-0b65-431c-a63b-1f93fa1e5004"
    )
    def test_generator_check_failure(self):
        with StepLogger("Запускаем generate --kind rotational с допуском generator_check = 1e-12"):
            code, report = self.run("generate", "--kind", "rotational", "--param", "beta=3",
                                    "--tol", "generator_check=1e-12")

        with StepLogger("Проверяем код возврата"):
            assert_equal(code, 3)
            assert_is_none(report)

    @TestMetadata(
        name="Негативный кейс: файл лога не открывается",
        id="12a02a69-9f1a-4de0-9f8d-7af2f17072ff"
    )
    def test_unwritable_log_file(self):
        with StepLogger("Запускаем classify с --log-file в несуществующем каталоге"):
            code, report = self.run("classify", "--alpha", "2", "--delta", "1",
                                    "--log-file", str(self.tmp_path / "missing" / "run.log"))

        with StepLogger("Проверяем код возврата"):
            assert_equal(code, 4)
            assert_is_none(report)

    @TestMetadata(
        name="Негативный кейс: входной файл не найден",
        id="b78f0761-88dc-4b02-ae5e-321a4e49c3a4"
    )
    def test_missing_input(self):
        with StepLogger("Запускаем analyze с несуществующим файлом"):
            code, report = self.run("analyze", "--in", str(self.tmp_path / "missing.csv"))

        with StepLogger("Проверяем код возврата"):
            assert_equal(code, 4)
            assert_is_none(report)

    @pytest.mark.parametrize("content", ["garbage\n", '{"nu": 5}\n0,0,1,2\n'], ids=["no_header", "short_table"])
    @TestMetadata(
        name="Негативный кейс: некорректный файл поверхности",
        id="26f2e580-fb97-45ad-8f21-649246f64635"
    )
    def test_malformed_input(self, content):
        # Arrange
        path = self.tmp_path / "bad.csv"
        path.write_text(content, encoding="utf-8")

        # Act
        with StepLogger("Запускаем analyze с некорректным файлом"):
            code, _ = self.run("analyze", "--in", str(path))

        # Assert
        with StepLogger("Проверяем код возврата"):
            assert_equal(code, 4)

    @TestMetadata(
        name="Негативный кейс: некорректный JSON конфигурации",
        id="6e63f326-5d0e-4c56-823a-894855d7fc69"
    )
    def test_malformed_config(self):
        with StepLogger("Запускаем classify с битой конфигурацией"):
            path = self.tmp_path / "run.json"
            path.write_text("{not json", encoding="utf-8")
            code, _ = self.run("classify", "--config", str(path))

        with StepLogger("Проверяем код возврата"):
            assert_equal(code, 4)
