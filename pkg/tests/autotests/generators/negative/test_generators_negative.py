import numpy as np
import pytest

from tests.utils.custom_assertions import assert_true
from tests.utils.test_logger import TestMetadata
from weingarten.errors import (
    CompatibilityError,
    InvariantCheckError,
    PDEResidualError,
    RangeError,
    SmoothnessError,
    UsageError,
)
from weingarten.generators import (
    MeridianSpec,
    SpaceCurveSpec,
    gamma_surface,
    meridian_curvature_ode,
    reconstruct_surface,
    rotational_basic45,
    rotational_natural_ode,
)
from weingarten.geometry import GridSpec
from weingarten.natural import NaturalGauge, NuField, cmc_pair
from weingarten.utils.step_logger import StepLogger


@pytest.mark.generators
@pytest.mark.smoke
@pytest.mark.negative
class TestGeneratorsNegative:

    @pytest.fixture(autouse=True)
    def setup(self):
        with StepLogger("Подготавливаем сетку и пару H = 1/2"):
            self.spec = GridSpec.spanning((0.0, 0.5), (0.0, 0.5), 11, 11)
            self.pair = cmc_pair(0.5)
            self.gauge = NaturalGauge()

    @pytest.mark.parametrize("beta", [0.0, 1.0, -1.0])
    @TestMetadata(
        name="Негативный кейс: недопустимый параметр beta натурального ОДУ",
        id="27cf4432-e05c-4909-8743-2ad1f795024e"
    )
    def test_rejected_beta(self, beta):
        with StepLogger(f"Решаем натуральное ОДУ при beta = {beta}"):
            with pytest.raises(UsageError):
                rotational_natural_ode(beta, 1.0, 0.0, 0.4)

    @TestMetadata(
        name="Негативный кейс: некорректные начальные данные ОДУ",
        id="5849555b-c0a6-411a-93a4-81644766c6ad"
    )
    def test_invalid_ode_inputs(self):
        with StepLogger("nu(0) <= 0"):
            with pytest.raises(UsageError):
                rotational_natural_ode(3.0, 0.0, 0.0, 0.4)

        with StepLogger("Отрицательный шаг"):
            with pytest.raises(UsageError):
                rotational_natural_ode(3.0, 1.0, 0.0, 0.4, du=-1e-3)

        with StepLogger("ОДУ кривизны меридиана при beta = -1"):
            with pytest.raises(UsageError):
                meridian_curvature_ode(-1.0, 1.0, 0.0, 1.0)

    @TestMetadata(
        name="Негативный кейс: решение натурального ОДУ покидает область nu > 0",
        id="bac49f21-d540-4748-b6e6-0e5a20a8ec69"
    )
    def test_profile_leaves_range(self):
        with StepLogger("Строгий режим"):
            with pytest.raises(RangeError):
                rotational_natural_ode(3.0, 1.0, 0.0, 5.0)

        with StepLogger("Нестрогий режим возвращает усечённый профиль"):
            profile = rotational_natural_ode(3.0, 1.0, 0.0, 5.0, strict=False)
            assert_true(profile.truncated)
            assert_true(profile.u_max < 5.0)

    @TestMetadata(
        name="Негативный кейс: сетка выходит за пределы профиля",
        id="27b5c954-b7ea-473b-830b-941de3bf13f4"
    )
    def test_grid_beyond_profile(self):
        with StepLogger("Строим поверхность на сетке до u = 0.5 по профилю до u = 0.4"):
            profile = rotational_natural_ode(3.0, 1.0, 0.0, 0.4)
            with pytest.raises(RangeError):
                rotational_basic45(3.0, profile, self.spec)

        with StepLogger("Профиль построен для другого beta"):
            with pytest.raises(UsageError):
                rotational_basic45(0.5, profile, GridSpec.spanning((0.0, 0.3), (0.0, 0.2), 11, 11))

    @pytest.mark.parametrize(
        "frame",
        [
            {"t0": (1.0, 0.0, 0.0), "n0": (1.0, 0.0, 0.0), "b0": (0.0, 0.0, 1.0)},
            {"t0": (1.0, 0.0, 0.0), "n0": (0.0, 1.0, 0.0), "b0": (0.0, 0.0, -1.0)},
        ],
        ids=["not_orthonormal", "left_handed"],
    )
    @TestMetadata(
        name="Негативный кейс: некорректный начальный репер кривой",
        id="275322f9-4fc4-4452-b35d-cdb7654d96ca"
    )
    def test_invalid_frame(self, frame):
        with StepLogger(f"Создаём кривую с репером {frame}"):
            with pytest.raises(UsageError):
                SpaceCurveSpec.circle(1.0, **frame)

    @TestMetadata(
        name="Негативный кейс: поверхность класса Gamma теряет гладкость",
        id="f3b5c877-31ef-42a3-b437-8f5013aef698"
    )
    def test_gamma_not_smooth(self):
        with StepLogger("Меридиан радиуса 1/2 вдоль единичной окружности доходит до её оси"):
            spec = GridSpec.spanning((0.0, np.pi / 2.0), (0.0, 0.3), 11, 11)
            with pytest.raises(SmoothnessError):
                gamma_surface(SpaceCurveSpec.circle(1.0), MeridianSpec.circle(0.5), spec, guard=1e-3)

    @TestMetadata(
        name="Негативный кейс: самопроверка генератора с недостижимым допуском",
        id="9856ddcb-e9f5-4478-badc-1ae0be61812d"
    )
    def test_generator_self_check(self):
        with StepLogger("Тор класса Gamma с допуском 1e-12 на расхождение с инвариантами"):
            spec = GridSpec.spanning((0.1, 0.5), (0.0, 0.4), 21, 21)
            with pytest.raises(InvariantCheckError):
                gamma_surface(SpaceCurveSpec.circle(2.0), MeridianSpec.circle(0.5), spec, tol_check=1e-12)

        with StepLogger("Вращательная поверхность beta = 3 с допуском 1e-12 на отношение кривизн"):
            profile = rotational_natural_ode(3.0, 1.0, 0.0, 0.4)
            with pytest.raises(InvariantCheckError):
                rotational_basic45(3.0, profile, GridSpec.spanning((0.05, 0.3), (0.0, 0.2), 11, 11), tol_check=1e-12)

    @TestMetadata(
        name="Негативный кейс: поле nu не удовлетворяет натуральному уравнению",
        id="07beba92-1497-4f9e-a7d1-2680cbef730c"
    )
    def test_noisy_field(self):
        with StepLogger("Восстанавливаем поверхность по зашумлённому полю"):
            rng = np.random.default_rng(3)
            nu = NuField(spec=self.spec, values=0.01 * rng.standard_normal((11, 11)))
            with pytest.raises(PDEResidualError):
                reconstruct_surface(self.pair, self.gauge, nu)

    @TestMetadata(
        name="Негативный кейс: несовместные коэффициенты репера",
        id="402bed2b-533d-4a0e-aed6-823a711c8df4"
    )
    def test_incompatible_field(self):
        with StepLogger("Восстанавливаем поверхность по линейному полю без проверки уравнения"):
            nu = NuField.from_function(lambda u, v: 0.3 * u + 0.2 * v, self.spec)
            with pytest.raises(CompatibilityError):
                reconstruct_surface(self.pair, self.gauge, nu, tol_pde=10.0, tol_compat=1e-5)
