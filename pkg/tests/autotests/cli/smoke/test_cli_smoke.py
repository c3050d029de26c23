import json

import pytest

from tests.data.relation_data import CLASSIFICATION_CASES
from tests.data.surface_data import SurfaceData
from tests.utils.custom_assertions import assert_close, assert_equal, assert_false, assert_in, assert_less, assert_true
from tests.utils.test_logger import TestMetadata
from weingarten.geometry import SurfaceGrid
from weingarten.utils.step_logger import StepLogger


@pytest.mark.cli
@pytest.mark.smoke
class TestCliSmoke:
    """
    Команды командной строки: коды возврата и содержимое JSON-отчётов.
    """

    @pytest.fixture(autouse=True)
    def setup(self, run_cli, tmp_path):
        with StepLogger("Подготавливаем запуск командной строки"):
            self.run = run_cli
            self.tmp_path = tmp_path
            self.catenoid = SurfaceData("catenoid", u_range=(0.5, 1.0), v_range=(0.0, 0.5))

    def generate_named(self, data: SurfaceData, name: str = "surface.csv"):
        path = self.tmp_path / name
        code, _ = self.run("generate", "--kind", "named", "--name", data.name, *data.cli_grid(), "--out", str(path))
        assert_equal(code, 0)
        return path

    @pytest.mark.parametrize("case", CLASSIFICATION_CASES, ids=repr)
    @TestMetadata(
        name="Команда classify относит соотношение к базовому классу",
        id="d322820b-03c5-4d2c-8354-04e50b430bc5"
    )
    def test_classify(self, case):
        with StepLogger(f"Запускаем classify для {case.coefficients}"):
            code, report = self.run("classify", *case.cli_args())

        with StepLogger("Проверяем код возврата и строку"):
            assert_equal(code, 0)
            assert_equal(report["basic_class"]["row"], case.row)
            assert_equal(report["pde"]["row"], case.row)

    @TestMetadata(
        name="Команда classify: уравнение синус-Гордон для K = -1",
        id="0825e2ee-8678-4910-8a72-b8c05c62ed3f"
    )
    def test_classify_sine_gordon(self):
        with StepLogger("Запускаем classify --alpha 0 --beta 0 --gamma -1 --delta 1"):
            code, report = self.run("classify", "--alpha", "0", "--beta", "0", "--gamma", "-1", "--delta", "1")

        with StepLogger("Проверяем отчёт"):
            assert_equal(code, 0)
            assert_equal(report["basic_class"]["row"], 8)
            assert_equal(report["pde"]["operator"], "wave")
            assert_close(report["discriminant"], -4.0, 1e-15)

    @TestMetadata(
        name="Конфигурация из JSON-файла",
        id="65a6e7fe-b097-43d4-82c3-5298d43de190"
    )
    def test_config_file(self):
        # Arrange
        config = self.tmp_path / "run.json"
        config.write_text(json.dumps({"relation": [2.0, 0.0, 0.0, 1.0]}), encoding="utf-8")

        # Act
        with StepLogger("Запускаем classify с --config"):
            code, report = self.run("classify", "--config", str(config))

        # Assert
        with StepLogger("Проверяем приведение сдвигом"):
            assert_equal(code, 0)
            assert_equal(report["basic_class"]["row"], 1)
            assert_close(report["basic_class"]["offset"], 0.5, 1e-12)

    @TestMetadata(
        name="Файл лога задаётся флагом --log-file, переменная окружения LOG_FILE не читается",
        id="4b4feff9-b9cd-4c10-b140-7a77377b6853"
    )
    def test_log_file_flag(self, monkeypatch):
        # Arrange
        ignored = self.tmp_path / "env.log"
        log_file = self.tmp_path / "run.log"
        monkeypatch.setenv("LOG_FILE", str(ignored))

        # Act
        with StepLogger("Запускаем classify с --log-file"):
            code, _ = self.run("classify", "--alpha", "2", "--delta", "1",
                               "--log-level", "INFO", "--log-file", str(log_file))

        # Assert
        with StepLogger("Проверяем, что лог записан только в файл из флага"):
            assert_equal(code, 0)
            assert_true(log_file.is_file(), "Файл лога из --log-file не создан")
            assert_in("Команда classify", log_file.read_text(encoding="utf-8"))
            assert_false(ignored.exists(), "LOG_FILE из окружения не должен использоваться")

    @TestMetadata(
        name="Генерация катеноида и анализ его кривизн",
        id="7fa00838-0956-438c-8759-8a3f26ccccb1"
    )
    def test_generate_and_analyze(self):
        with StepLogger("Генерируем катеноид"):
            path = self.generate_named(self.catenoid)
            grid = SurfaceGrid.load(path)
            assert_equal((grid.nu, grid.nv), (51, 51))

        with StepLogger("Анализируем поверхность"):
            code, report = self.run("analyze", "--in", str(path))

        with StepLogger("Проверяем кривизны, тип сети и подобранное соотношение"):
            assert_equal(code, 0)
            assert_equal(report["regularity_type"], "rotational")
            assert_less(abs(report["curvatures"]["H"]["mean"]), 1e-3)
            assert_less(report["naturality"]["relative_defect"], 1e-3)
            assert_equal(report["relation"]["classification"]["row"], 1)
            assert_equal(report["umbilics"], [])

    @TestMetadata(
        name="Параллельный сдвиг цилиндра через командную строку",
        id="e74bb896-9c7b-47f6-b72c-bc3d84f15c08"
    )
    def test_parallel(self):
        with StepLogger("Генерируем цилиндр и сдвигаем на a = 0.5"):
            path = self.generate_named(SurfaceData("cylinder"))
            out = self.tmp_path / "shifted.csv"
            code, report = self.run("parallel", "--in", str(path), "--a", "0.5", "--out", str(out),
                                    "--alpha", "1", "--beta", "0", "--gamma", "-0.5", "--delta", "0")

        with StepLogger("Проверяем знак eps, дефект K и соотношение"):
            assert_equal(code, 0)
            assert_equal(report["offset"]["epsilon"], 1)
            assert_less(report["K_defect"], 1e-8)
            assert_close(report["parallel_relation"]["delta"], -0.375, 1e-15)
            assert_true(out.is_file())

    @TestMetadata(
        name="Экспорт поверхности в OBJ",
        id="584015a8-0e6e-4e2d-94b0-98cc2e56aa51"
    )
    def test_export_obj(self):
        with StepLogger("Генерируем цилиндр и экспортируем"):
            path = self.generate_named(SurfaceData("cylinder"))
            out = self.tmp_path / "surface.obj"
            code, report = self.run("export", "--in", str(path), "--out", str(out), "--format", "obj")

        with StepLogger("Проверяем файл"):
            assert_equal(code, 0)
            assert_equal(report["format"], "obj")
            lines = out.read_text(encoding="utf-8").splitlines()
            assert_equal(sum(line.startswith("v ") for line in lines), 41 * 41)

    @TestMetadata(
        name="Генерация вращательной поверхности класса H = 3 H'",
        id="b6cb0fd0-7b98-4ab7-b21a-e34106f09ecf"
    )
    def test_generate_rotational(self):
        with StepLogger("Запускаем generate --kind rotational --param beta=3"):
            code, report = self.run("generate", "--kind", "rotational", "--param", "beta=3")

        with StepLogger("Проверяем отношение главных кривизн"):
            assert_equal(code, 0)
            assert_close(report["expected_ratio"], 2.0, 1e-15)
            assert_less(report["ratio_defect"], 1e-2)
            assert_less(report["first_integral_drift"], 1e-8)

    @TestMetadata(
        name="Генерация шара Mylar через поверхность класса Gamma",
        id="bb4c8d26-8c0a-4929-9e5a-cf560b8641f5"
    )
    def test_generate_mylar(self):
        with StepLogger("Запускаем generate --kind gamma --param mylar_beta=3"):
            code, report = self.run("generate", "--kind", "gamma", "--param", "mylar_beta=3")

        with StepLogger("Проверяем радиус оси и расхождение с инвариантами"):
            assert_equal(code, 0)
            assert_close(report["curve_kappa"], 0.5, 1e-15)
            assert_less(report["invariant_defect"], 1e-2)

    @TestMetadata(
        name="Невязка точного решения строки 9",
        id="a8b7e339-8d85-4258-a1aa-78336a67cad9"
    )
    def test_residual_row9(self):
        with StepLogger("Запускаем residual --row 9"):
            code, report = self.run("residual", "--row", "9")

        with StepLogger("Проверяем невязку"):
            assert_equal(code, 0)
            assert_less(report["residual"]["max_abs"], 1e-9)

    @TestMetadata(
        name="Решение уравнения Лиувилля через командную строку",
        id="bc73125f-3827-4afb-b1bf-a5ca52655119"
    )
    def test_solve_row1(self):
        with StepLogger("Запускаем solve --row 1"):
            code, report = self.run("solve", "--row", "1")

        with StepLogger("Проверяем сходимость и ошибку"):
            assert_equal(code, 0)
            assert_true(report["solver"]["converged"])
            assert_less(report["max_error"], 1e-2)

    @TestMetadata(
        name="Решение уравнения синус-Гордон схемой чехарда",
        id="633ab536-0d52-4bea-b4d2-81e7521c1f80"
    )
    def test_solve_row8(self):
        with StepLogger("Запускаем solve --row 8"):
            code, report = self.run("solve", "--row", "8")

        with StepLogger("Проверяем отчёт"):
            assert_equal(code, 0)
            assert_equal(report["pde"]["operator"], "wave")
            assert_true("energy_drift" in report)

    @pytest.mark.parametrize("row", [1, 8])
    @TestMetadata(
        name="Сквозной пример строки",
        id="e99a05b6-6d73-4161-b9ec-45d40d0c7fef"
    )
    def test_pipeline(self, row):
        # Arrange
        out = self.tmp_path / f"row{row}"

        # Act
        with StepLogger(f"Запускаем pipeline --row {row}"):
            code, report = self.run("pipeline", "--row", str(row), "--out", str(out))

        # Assert
        with StepLogger("Проверяем отчёт и артефакты"):
            assert_equal(code, 0)
            assert_equal(report["row"], row)
            for name in ("field.csv", "surface.csv", "surface.obj"):
                assert_true((out / name).is_file(), f"Нет артефакта {name}")
            assert_less(report["relation_residual"]["max_abs"], 1e-2)
