import numpy as np
import pytest

from tests.data.relation_data import CLASSIFICATION_CASES
from tests.data.surface_data import SurfaceData
from tests.utils.custom_assertions import assert_close, assert_equal, assert_greater, assert_is_none, assert_less
from tests.utils.test_logger import TestMetadata
from tests.utils.utils import verify_data
from weingarten.errors import WeingartenError
from weingarten.geometry import analyze_surface
from weingarten.linear import (
    LinearRelation,
    MoebiusCoeffs,
    basic_id,
    basic_pde,
    check_relation,
    classify,
    fit_relation,
    moebius_from_relation,
    parallel_relation,
    relation_from_moebius,
    relation_pair,
    scaled_basic_pde,
)
from weingarten.parallel import parallel_invariants
from weingarten.pde import OperatorKind
from weingarten.utils.step_logger import StepLogger


@pytest.mark.linear
@pytest.mark.smoke
class TestLinearSmoke:
    """
    Линейные соотношения между K, H, H' и базовые классы.
    """

    @pytest.fixture(autouse=True)
    def setup(self):
        with StepLogger("Подготавливаем поверхности"):
            self.catenoid = SurfaceData("catenoid", u_range=(0.5, 1.0), v_range=(0.0, 0.5))
            self.pseudosphere = SurfaceData("pseudosphere", u_range=(0.5, 1.0), v_range=(0.0, 0.5))

    @pytest.mark.parametrize(
        "moebius, expected",
        [
            ((2.0, 0.0, 0.0, 1.0), (1.0, -3.0, 0.0, 0.0)),
            ((0.0, 1.0, 1.0, 0.0), (0.0, 0.0, 1.0, 1.0)),
        ],
    )
    @TestMetadata(
        name="Соотношение по коэффициентам Мёбиуса",
        id="f8a15dda-bb4e-4b17-8c8d-fddb4b9c379e"
    )
    def test_relation_from_moebius(self, moebius, expected):
        with StepLogger(f"Переводим коэффициенты {moebius} в соотношение"):
            relation = relation_from_moebius(MoebiusCoeffs(*moebius))

        with StepLogger("Проверяем коэффициенты"):
            assert_equal(relation.as_tuple(), expected)

    @TestMetadata(
        name="Дискриминант соотношения равен 4(BC - AD)",
        id="bbf85049-e9b3-4fcc-92b8-e8a8f6fe6817"
    )
    def test_discriminant_and_moebius(self):
        # Arrange
        rng = np.random.default_rng(11)

        # Act / Assert
        with StepLogger("Проверяем 200 случайных соотношений"):
            for coefficients in rng.uniform(-2.0, 2.0, (200, 4)):
                relation = LinearRelation(*coefficients)
                m = moebius_from_relation(relation)
                assert_close(relation.discriminant, 4.0 * (m.B * m.C - m.A * m.D), 1e-12)
                assert_close(relation_from_moebius(m).as_tuple(), relation.as_tuple(), 1e-12)

    @TestMetadata(
        name="Проверка соотношений на аналитических поверхностях",
        id="18b84363-e3ca-40e8-b4b8-785560a6b0af"
    )
    def test_check_relation_on_surfaces(self):
        with StepLogger("Катеноид: H = 0"):
            _, cf, _ = analyze_surface(self.catenoid.grid())
            assert_less(check_relation(cf, LinearRelation(1.0, 0.0, 0.0, 0.0)).max_abs, 1e-4)

        with StepLogger("Псевдосфера: K = -1"):
            _, cf, _ = analyze_surface(self.pseudosphere.grid())
            assert_less(check_relation(cf, LinearRelation(0.0, 0.0, -1.0, 1.0)).max_abs, 1e-3)

        with StepLogger("Цилиндр: H = 1/2"):
            _, cf, _ = analyze_surface(SurfaceData("cylinder").grid())
            assert_less(check_relation(cf, LinearRelation(1.0, 0.0, -0.5, 0.0)).max_abs, 1e-4)

    @TestMetadata(
        name="Пара Вайнгартена соотношения H = 0",
        id="97ec5b9c-fe3d-4907-bf88-ffb51788b746"
    )
    def test_relation_pair(self):
        with StepLogger("Строим пару соотношения минимальных поверхностей"):
            pair = relation_pair(LinearRelation(1.0, 0.0, 0.0, 0.0), (0.1, 2.0))

        with StepLogger("Проверяем g = nu, f = -nu"):
            nu = np.array([0.2, 0.5, 1.5])
            assert_equal(pair.kind, "linear-fractional")
            assert_close(pair.g(nu), nu, 1e-15)
            assert_close(pair.f(nu), -nu, 1e-14)
            assert_close(pair.df(nu), -1.0, 1e-14)

    @TestMetadata(
        name="Подбор соотношения по полю кривизн",
        id="38db9840-fc3f-49d2-97f9-c8c775171d78"
    )
    def test_fit_relation(self):
        with StepLogger("Подбираем соотношение для катеноида"):
            _, cf, _ = analyze_surface(self.catenoid.grid())
            fit = fit_relation(cf, snap=1e-3)
            assert_equal(fit.relation.as_tuple(), (1.0, 0.0, 0.0, 0.0))
            assert_less(fit.residual.max_abs, 1e-4)

        with StepLogger("Подбираем соотношение для псевдосферы"):
            _, cf, _ = analyze_surface(self.pseudosphere.grid())
            fit = fit_relation(cf, snap=1e-2)
            assert_close(fit.relation.normalized().as_tuple(), (0.0, 0.0, -1.0, 1.0), 2e-3)
            assert_equal(classify(fit.relation).row, 8)

    @TestMetadata(
        name="Соотношения параллельных поверхностей",
        id="773f0610-7416-4b38-b6bc-841c1efebe42"
    )
    def test_parallel_relation_examples(self):
        with StepLogger("K = 2H при a = 1/2 переходит в H_bar = 0"):
            relation = parallel_relation(LinearRelation(2.0, 0.0, 0.0, 1.0), 0.5, 1)
            assert_equal(relation.as_tuple(), (2.0, 0.0, 0.0, 0.0))

        with StepLogger("H = 0 при a = 0.3 переходит в -0.3 K_bar = H_bar"):
            relation = parallel_relation(LinearRelation(1.0, 0.0, 0.0, 0.0), 0.3, 1, linear_case=True)
            assert_close(relation.as_tuple(), (1.0, 0.0, 0.0, -0.3), 1e-15)

    @pytest.mark.parametrize("a, eps", [(0.3, 1), (-0.4, 1), (2.0, 1), (5.0, -1)])
    @TestMetadata(
        name="Инварианты параллельной поверхности удовлетворяют перенесённому соотношению",
        id="8762c635-8e2c-4187-9a11-132096f6d578"
    )
    def test_parallel_relation_holds(self, a, eps):
        # Arrange
        relation = LinearRelation(1.0, 0.5, -0.2, 1.0)
        Hp = 0.5
        H = 0.5 * (1.0 - np.sqrt(1.0 + 4.0 * (Hp**2 + 0.5 * Hp - 0.2)))
        K = H**2 - Hp**2
        assert_close(relation.residual(K, H, Hp), 0.0, 1e-14)

        # Act
        with StepLogger(f"Сдвигаем точку на a = {a}"):
            K_bar, H_bar, Hp_bar, epsilon = parallel_invariants(K, H, Hp, a)
            moved = parallel_relation(relation, a, epsilon)

        # Assert
        with StepLogger("Проверяем знак eps и невязку перенесённого соотношения"):
            assert_equal(epsilon, eps)
            assert_close(moved.residual(K_bar, H_bar, Hp_bar), 0.0, 1e-12)

    @pytest.mark.parametrize("case", CLASSIFICATION_CASES, ids=repr)
    @TestMetadata(
        name="Классификация соотношений по таблице базовых классов",
        id="71fe82f1-7f3f-4c4c-b630-40d0b62c8e46"
    )
    def test_classify(self, case):
        with StepLogger(f"Классифицируем {case.coefficients}"):
            basic = classify(LinearRelation(*case.coefficients))

        with StepLogger("Проверяем строку, параметры и сдвиг"):
            assert_equal(basic.row, case.row)
            verify_data(basic.params, case.params, tol=1e-12, msg_option=f"для {case}")
            assert_equal(set(basic.params), set(case.params))
            if case.offset is None:
                assert_is_none(basic.offset)
            else:
                assert_close(basic.offset, case.offset, 1e-12)

    @TestMetadata(
        name="Классификация не зависит от масштаба соотношения",
        id="8075f914-e8da-401a-8699-79c8d98efe58"
    )
    def test_classify_scaling(self):
        for case in CLASSIFICATION_CASES:
            with StepLogger(f"Классифицируем {case.coefficients}, умноженное на -2.5"):
                basic = classify(LinearRelation(*case.coefficients).scaled(-2.5))
                assert_equal(basic.row, case.row)

    @TestMetadata(
        name="Приведённое соотношение не требует повторного сдвига",
        id="0efdce5c-faf0-4d9a-822d-25a3af41fde4"
    )
    def test_reduction_is_final(self):
        for coefficients in [(2.0, 0.0, 0.0, 1.0), (1.0, 0.0, -1.0, 1.0)]:
            with StepLogger(f"Приводим {coefficients} и классифицируем результат"):
                relation = LinearRelation(*coefficients)
                basic = classify(relation)
                again = classify(parallel_relation(relation, basic.offset, basic.epsilon))
                assert_equal(again.row, basic.row)
                assert_is_none(again.offset)

    @pytest.mark.parametrize(
        "row, kind",
        [
            (1, OperatorKind.LAPLACE), (2, OperatorKind.LAPLACE), (3, OperatorKind.STAR),
            (4, OperatorKind.STAR), (5, OperatorKind.WAVE_STAR), (6, OperatorKind.STAR),
            (7, OperatorKind.WAVE_STAR), (8, OperatorKind.WAVE), (9, OperatorKind.STAR),
            (10, OperatorKind.STAR),
        ],
    )
    @TestMetadata(
        name="Тип оператора натурального уравнения базового класса",
        id="efccce5a-6346-4ac7-bace-7394b1acdccd"
    )
    def test_basic_pde_kind(self, row, kind):
        with StepLogger(f"Строим уравнение строки {row}"):
            problem = basic_pde(basic_id(row))

        with StepLogger("Проверяем тип оператора и описание"):
            assert_equal(problem.kind, kind)
            assert_equal(problem.row, row)
            assert_equal(problem.describe()["row"], row)

    @TestMetadata(
        name="Уравнение синус-Гордон для K = -1 и его подобия",
        id="2b37483a-b8ee-4169-8603-468152ec1606"
    )
    def test_sine_gordon_family(self):
        # Arrange
        lam = np.linspace(-3.0, 3.0, 13)

        with StepLogger("Строим уравнение по классификации K = -1"):
            problem = basic_pde(classify(LinearRelation(0.0, 0.0, -1.0, 1.0)))
            assert_close(problem.rhs(lam), np.sin(lam), 1e-15)

        with StepLogger("Строим уравнение для K = -4"):
            problem = scaled_basic_pde(8, {"K": -4.0})
            assert_close(problem.rhs(lam), 16.0 * np.sin(lam), 1e-14)
            assert_close(problem.lambda_of_nu(problem.nu_of(lam / 2.0)), lam / 2.0, 1e-12)


def classification_outcome(coefficients) -> object:
    """Строка базового класса или имя исключения, если соотношение вырождено."""
    try:
        return classify(LinearRelation(*coefficients)).row
    except WeingartenError as exc:
        return type(exc).__name__


@pytest.mark.linear
@pytest.mark.regression
@pytest.mark.slow
class TestLinearProperties:

    @TestMetadata(
        name="Классификация 10^4 случайных соотношений не зависит от масштаба",
        id="a2b7ecea-7cd7-4bc8-b269-953c37b10adf"
    )
    def test_classify_scaling_random(self):
        # Arrange
        rng = np.random.default_rng(20261017)
        count = 10_000
        # Нулевые коэффициенты сохраняются при умножении, поэтому попадают все ветви дерева.
        coefficients = rng.normal(size=(count, 4)) * (rng.random((count, 4)) > 0.25)
        factors = rng.uniform(0.1, 10.0, count) * rng.choice([-1.0, 1.0], count)

        # Act
        with StepLogger(f"Классифицируем {count} соотношений и их кратные"):
            original = [classification_outcome(row) for row in coefficients]
            scaled = [classification_outcome(row * factor) for row, factor in zip(coefficients, factors)]

        # Assert
        with StepLogger("Проверяем совпадение строк"):
            mismatches = [k for k in range(count) if original[k] != scaled[k]]
            assert_equal(mismatches, [], f"Классы различаются для {len(mismatches)} соотношений")
            assert_greater(len({outcome for outcome in original if isinstance(outcome, int)}), 5)
