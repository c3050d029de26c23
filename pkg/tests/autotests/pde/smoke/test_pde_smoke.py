import numpy as np
import pytest

from tests.utils.custom_assertions import (
    assert_close,
    assert_equal,
    assert_less,
    assert_order_at_least,
    assert_true,
)
from tests.utils.test_logger import TestMetadata
from weingarten.geometry import GridSpec
from weingarten.linear import basic_id, basic_pde, scaled_basic_pde
from weingarten.pde import (
    OperatorKind,
    ScalarField2D,
    apply_operator,
    exact_solution,
    hyperbolic_energy,
    pde_residual,
    solve_elliptic,
    solve_hyperbolic,
)
from weingarten.utils.step_logger import StepLogger


def liouville_error(h: float):
    """
    Максимальная ошибка решения уравнения строки 1 на квадрате [-1/2, 1/2]^2 с шагом h.

    :return: (ошибка, отчёт Ньютона).
    """
    n = int(round(1.0 / h)) + 1
    spec = GridSpec.spanning((-0.5, 0.5), (-0.5, 0.5), n, n)
    exact = exact_solution(1, {}, spec)
    field, report = solve_elliptic(basic_pde(basic_id(1)), exact)
    return float(np.max(np.abs(field.values - exact.values))), report


@pytest.mark.pde
@pytest.mark.smoke
class TestPdeSmoke:
    """
    Дискретные операторы, точные решения и решатели натуральных уравнений.
    """

    @pytest.fixture(autouse=True)
    def setup(self):
        with StepLogger("Подготавливаем сетку [-1, 1] x [0, 1]"):
            self.spec = GridSpec.spanning((-1.0, 1.0), (0.0, 1.0), 41, 21)

    @pytest.mark.parametrize(
        "kind, func, expected",
        [
            (OperatorKind.LAPLACE, lambda x, y: x**2 + y**2, 4.0),
            (OperatorKind.WAVE, lambda x, y: x**2 + y**2, 0.0),
            (OperatorKind.STAR, lambda x, y: 1.0 / (1.0 + y**2), 2.0),
            (OperatorKind.WAVE_STAR, lambda x, y: 1.0 / (1.0 + y**2), -2.0),
        ],
        ids=["laplace", "wave", "star", "wave_star"],
    )
    @TestMetadata(
        name="Операторы точны на квадратичных функциях",
        id="48cfb397-0808-426b-ad2f-8478c7951ed7"
    )
    def test_operators_on_quadratics(self, kind, func, expected):
        # Arrange
        field = ScalarField2D.from_function(func, self.spec)

        # Act
        with StepLogger(f"Применяем оператор {kind.symbol}"):
            result = apply_operator(kind, field)

        # Assert
        with StepLogger("Проверяем значения во всех узлах"):
            assert_close(result.values, expected, 1e-9)

    @TestMetadata(
        name="ln(4 - x^2) решает уравнение строки 9",
        id="348b5bfd-3e6c-4399-b97c-5be6684e48ea"
    )
    def test_row9_log_parabola(self):
        with StepLogger("Строим точное решение и невязку"):
            problem = basic_pde(basic_id(9))
            residual = pde_residual(problem, exact_solution(9, {}, self.spec))

        with StepLogger("Проверяем невязку"):
            assert_less(residual.max_abs, 1e-10)

    @TestMetadata(
        name="Постоянные решения строк 3 и 6",
        id="880f2b38-bf79-4025-aec9-0f9225e9afae"
    )
    def test_constant_solutions(self):
        with StepLogger("Строка 3: константы 0 и -2"):
            for constant in (0.0, -2.0):
                field = exact_solution(3, {"constant": constant}, self.spec)
                assert_less(pde_residual(basic_pde(basic_id(3)), field).max_abs, 1e-12)

        with StepLogger("Строка 6 при beta = 3, k = -1: константа 1"):
            problem = scaled_basic_pde(6, {"beta": 3.0, "k": -1.0})
            field = exact_solution(6, {"beta": 3.0, "k": -1.0}, self.spec)
            assert_close(field.values, 1.0, 1e-15)
            assert_less(pde_residual(problem, field).max_abs, 1e-12)

    @TestMetadata(
        name="Метод Ньютона для строки 2 сходится к нулевому решению",
        id="857b3e23-fc60-439f-bfb6-67fd82858b59"
    )
    def test_row2_newton_to_zero(self):
        # Arrange
        problem = scaled_basic_pde(2, {"H": 0.5})
        boundary = ScalarField2D.from_function(lambda x, y: np.zeros_like(x), self.spec)
        init = boundary.with_values(np.full(boundary.values.shape, 0.3))

        # Act
        with StepLogger("Решаем задачу Дирихле с нулевой границей"):
            field, report = solve_elliptic(problem, boundary, init)

        # Assert
        with StepLogger("Проверяем решение и отчёт"):
            assert_true(report.converged)
            assert_close(field.values, 0.0, 1e-9)
            assert_less(report.final_residual, 1e-10)

    @TestMetadata(
        name="Уравнение Лиувилля: решение Ньютона совпадает с точным",
        id="8b040f0b-9c5e-4012-b598-1acecf341657"
    )
    def test_liouville_solution(self):
        with StepLogger("Решаем на сетке с шагом 1/32"):
            error, report = liouville_error(1.0 / 32.0)

        with StepLogger("Проверяем ошибку и квадратичную сходимость"):
            assert_less(error, 1e-3)
            assert_true(report.converged)
            assert_less(report.iterations, 10)
            assert_equal(report.as_dict()["converged"], True)
            assert_true(report.quadratic_constant is not None, "Хвост невязок слишком короткий для оценки C")
            assert_true(np.isfinite(report.quadratic_constant), f"C = {report.quadratic_constant}")

    @TestMetadata(
        name="Статический кинк уравнения синус-Гордон",
        id="46d14b39-2de4-418c-bb93-605f4581391e"
    )
    def test_sine_gordon_kink(self):
        # Arrange
        problem = basic_pde(basic_id(8))
        x = np.linspace(-8.0, 8.0, 321)
        values0 = 4.0 * np.arctan(np.exp(x))

        # Act
        with StepLogger("Интегрируем схемой чехарда до y = 1"):
            field = solve_hyperbolic(problem, values0, np.zeros_like(x), (-8.0, 8.0), 1.0, 0.025)
            exact = exact_solution(8, {}, field.spec)

        # Assert
        with StepLogger("Сравниваем с точным решением и проверяем энергию"):
            assert_equal(field.values.shape, (321, 41))
            assert_close(field.values, exact.values, 2e-3)
            assert_close(hyperbolic_energy(problem, field), 8.0, 1e-2)

    @TestMetadata(
        name="Малое периодическое возмущение для строки 8 сохраняет энергию",
        id="d8c92f4e-2948-4ae8-99f2-b1a4809aa6e7"
    )
    def test_periodic_energy(self):
        # Arrange
        problem = scaled_basic_pde(8, {"K": -1.0})
        x = np.linspace(0.0, 2.0 * np.pi, 129)[:-1]
        values0 = 0.1 * np.sin(x)

        # Act
        with StepLogger("Интегрируем малое возмущение с периодической границей"):
            field = solve_hyperbolic(problem, values0, 0.1 * np.cos(x), (0.0, x[-1]), 2.0, 0.02,
                                     boundary="periodic")
            energy = hyperbolic_energy(problem, field)

        # Assert
        with StepLogger("Проверяем сохранение энергии"):
            assert_less(float(np.max(energy) - np.min(energy)), 1e-2 * float(energy[0]))


@pytest.mark.pde
@pytest.mark.regression
@pytest.mark.slow
class TestPdeConvergence:

    @pytest.fixture(autouse=True)
    def setup(self):
        with StepLogger("Подготавливаем последовательность сеток"):
            self.steps = [1.0 / 8.0, 1.0 / 16.0, 1.0 / 32.0]

    @TestMetadata(
        name="Второй порядок сходимости решения уравнения Лиувилля",
        id="9be5c00d-9074-4f5a-af3c-4b810aeba9f3"
    )
    def test_liouville_order(self):
        with StepLogger("Решаем на трёх сетках"):
            errors = [liouville_error(h)[0] for h in self.steps]

        with StepLogger("Проверяем порядок"):
            assert_order_at_least(errors, self.steps, 1.8)
