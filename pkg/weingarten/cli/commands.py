"""
Реализация команд: каждая принимает RunConfig и возвращает отчёт-словарь.
"""
import json
import logging
import math
from pathlib import Path

import numpy as np
from scipy.interpolate import CubicSpline

from weingarten.cli.config import RunConfig
from weingarten.errors import DataIOError, DegenerateRelationError, UmbilicError, UsageError
from weingarten.generators import (
    MeridianSpec,
    SpaceCurveSpec,
    gamma_invariants,
    gamma_surface,
    invariant_defect,
    meridian_curvature_ode,
    named_surface,
    ratio_defect,
    reconstruct_with_report,
    rotational_basic45,
    rotational_from_relation,
    rotational_natural_ode,
)
from weingarten.geometry import (
    GridSpec,
    SurfaceGrid,
    analyze_surface,
    codazzi_residual,
    gauss_residual,
    regularity_type,
    umbilic_scan,
)
from weingarten.linear import (
    LinearRelation,
    basic_id,
    basic_pde,
    basic_relation,
    check_relation,
    classify,
    fit_relation,
    parallel_relation,
    scaled_basic_pde,
)
from weingarten.linear.classification import ROWS
from weingarten.natural import NaturalGauge, NuField, load_pair, naturality_check
from weingarten.parallel import offset_sign, offset_surface, parallel_invariants
from weingarten.pde import ScalarField2D, exact_solution, hyperbolic_energy, pde_residual, solve_elliptic, solve_hyperbolic

logger = logging.getLogger(__name__)

DEFAULT_SURFACE_GRID = GridSpec(nu=51, nv=51, u0=0.5, v0=0.0, du=0.01, dv=0.01)
DEFAULT_GENERATOR_GRIDS = {
    "gamma": GridSpec.spanning((0.0, 0.5), (0.0, 0.5 * math.pi), 26, 21),
    "rotational": GridSpec.spanning((0.0, 0.25), (0.0, 0.5 * math.pi), 26, 21),
    "relation": GridSpec.spanning((0.0, 0.5), (0.0, 0.5 * math.pi), 26, 21),
}
DEFAULT_FIELD_GRID = GridSpec.spanning((-1.0, 1.0), (-1.0, 1.0), 41, 41)
ROTATIONAL_FIELD_GRID = GridSpec.spanning((0.0, 0.25), (0.0, 0.25), 26, 26)
PIPELINE_SURFACE_GRID = GridSpec.spanning((0.0, 0.5), (0.0, 0.5 * math.pi), 26, 21)
# Параметры эталонных полей, при которых у строки есть замкнутое решение.
PIPELINE_PARAMS = {6: {"k": -1.0}}
FIT_SNAP = 1e-3


def _curvature_report(grid: SurfaceGrid, config: RunConfig):
    tol = config.tolerances
    forms, cf, _ = analyze_surface(
        grid, check_umbilics=False, tol_regularity=tol.regularity, tol_principal=tol.principal,
        tol_umbilic=tol.umbilic,
    )
    return forms, cf


def save_grid(grid: SurfaceGrid, path, export_format: str) -> Path:
    """
    Сохраняет поверхность в формате csv (заголовок + строки), json или obj.

    :raises DataIOError: Если файл не записывается.
    """
    path = Path(path)
    if export_format == "obj":
        return grid.export_obj(path)
    if export_format == "json":
        try:
            path.write_text(json.dumps({"header": grid.spec.header(), "points": grid.points.tolist()}), encoding="utf-8")
        except OSError as exc:
            raise DataIOError(f"Не удалось записать {path}: {exc}") from exc
        return path
    return grid.save(path)


def analyze(config: RunConfig) -> dict:
    """Кривизны, невязки Кодацци и Гаусса, дефект натуральности, омбилики и подобранное соотношение."""
    grid = SurfaceGrid.load(config.input)
    forms, cf = _curvature_report(grid, config)
    umbilics = umbilic_scan(cf, config.tolerances.umbilic)
    report = {
        "surface": {"nu": grid.nu, "nv": grid.nv, "diameter": grid.diameter},
        "curvatures": cf.summary(),
        "orientation_flipped": cf.flipped,
        "gauss": gauss_residual(cf, forms).summary(),
        "naturality": naturality_check(forms.E, forms.G, cf.nu1, cf.nu2).summary(),
        "umbilics": umbilics,
        "regularity_type": regularity_type(cf),
        "codazzi": None,
        "relation": None,
    }
    try:
        first, second = codazzi_residual(cf, forms)
        report["codazzi"] = [first.summary(), second.summary()]
    except UmbilicError as exc:
        logger.warning(f"Невязки Кодацци не вычислены: {exc}")
    try:
        fit = fit_relation(cf, snap=FIT_SNAP)
        report["relation"] = {
            "coefficients": fit.relation.describe(),
            "residual": fit.residual.summary(),
            "singular_values": list(fit.singular_values),
            "classification": classify(fit.relation).describe(),
        }
    except DegenerateRelationError as exc:
        logger.warning(f"Соотношение не подобрано: {exc}")
    return report


def _relation(config: RunConfig) -> LinearRelation:
    return LinearRelation(*config.require("relation"))


def classify_command(config: RunConfig) -> dict:
    """Базовый класс соотношения, рецепт приведения и натуральное уравнение."""
    relation = _relation(config)
    basic = classify(relation, config.eps)
    return {
        "relation": relation.describe(),
        "discriminant": relation.discriminant,
        "basic_class": {**basic.describe(), "title": basic.title},
        "pde": basic_pde(basic).describe(),
    }


def _gamma(config: RunConfig, spec: GridSpec):
    params = config.params
    kappa = float(params.get("kappa", 1.0))
    if "mylar_beta" in params:
        beta, kappa1 = float(params["mylar_beta"]), float(params.get("kappa1", 1.0))
        solution = meridian_curvature_ode(beta, kappa1, 0.0, float(spec.u[-1]), config.tolerances.ode_step)
        meridian = solution.spec()
        # На экваторе nu2 = kappa: ось вращения выбирается так, что nu1/nu2 = (beta + 1)/(beta - 1).
        kappa = float(params.get("kappa", kappa1 * (beta - 1.0) / (beta + 1.0)))
    else:
        meridian = MeridianSpec.circle(float(params.get("r", 0.25)))
    curve = SpaceCurveSpec.helix(kappa, float(params.get("tau", 0.0)))
    grid = gamma_surface(curve, meridian, spec, ode_step=config.tolerances.ode_step,
                         tol_check=config.tolerances.generator_check)
    invariants = gamma_invariants(curve, meridian, spec, ode_step=config.tolerances.ode_step)
    return grid, {"curve_kappa": kappa, "invariant_defect": invariant_defect(grid, invariants)}


def _rotational(config: RunConfig, spec: GridSpec):
    beta = float(config.params.get("beta", 3.0))
    du = min(config.tolerances.ode_step, spec.du / 10.0)
    profile = rotational_natural_ode(beta, 1.0, 0.0, float(spec.u[-1]) + du, du)
    grid = rotational_basic45(beta, profile, spec, tol_check=config.tolerances.generator_check)
    return grid, {
        "expected_ratio": (beta + 1.0) / (beta - 1.0),
        "ratio_defect": ratio_defect(grid, beta),
        "first_integral_drift": profile.drift,
    }


def _relation_surface(config: RunConfig, spec: GridSpec):
    relation = _relation(config)
    grid = rotational_from_relation(relation, spec)
    _, cf = _curvature_report(grid, config)
    return grid, {"relation": relation.describe(), "relation_residual": check_relation(cf, relation).summary()}


def _reconstruct(config: RunConfig, spec: GridSpec):
    field = ScalarField2D.load(config.require("input"))
    pair = load_pair(config.require("pair"))
    params = config.params
    gauge = NaturalGauge(float(params.get("a_frak", 1.0)), float(params.get("b_frak", 1.0)),
                         float(params.get("nu0", 0.0)))
    tol = config.tolerances
    result = reconstruct_with_report(
        pair, gauge, NuField(spec=field.spec, values=field.values),
        tol_pde=tol.pde_reconstruct, tol_compat=tol.compatibility, tol_quad=tol.quadrature,
    )
    return result.grid, result.as_dict()


def generate(config: RunConfig) -> dict:
    """Поверхность одного из генераторов; поверхность пишется в --out, отчёт возвращается."""
    kind = config.require("kind")
    spec = config.grid or DEFAULT_GENERATOR_GRIDS.get(kind, DEFAULT_SURFACE_GRID)
    if kind == "named":
        grid, details = named_surface(config.require("name"), config.params, spec), {}
    elif kind == "gamma":
        grid, details = _gamma(config, spec)
    elif kind == "rotational":
        grid, details = _rotational(config, spec)
    elif kind == "relation":
        grid, details = _relation_surface(config, spec)
    else:
        grid, details = _reconstruct(config, spec)
    report = {"kind": kind, "grid": grid.spec.header(), "diameter": grid.diameter, **details}
    if config.output is not None:
        report["output"] = save_grid(grid, config.output, config.export_format)
    return report


def parallel(config: RunConfig) -> dict:
    """Параллельный сдвиг: знак eps, инварианты и (если задано) соотношение сдвинутой поверхности."""
    grid = SurfaceGrid.load(config.input)
    a = config.require("offset")
    guard = config.tolerances.offset_guard
    offset = offset_sign(grid, a, guard)
    shifted = offset_surface(grid, a, guard)
    _, cf = _curvature_report(grid, config)
    _, cf_bar = _curvature_report(shifted, config)
    K_bar, _, _, _ = parallel_invariants(cf.K, cf.H, cf.Hprime, a)
    core = (slice(1, -1), slice(1, -1))
    report = {
        "offset": offset.describe(),
        "original": cf.summary(),
        "parallel": cf_bar.summary(),
        "K_defect": float(np.max(np.abs(K_bar[core] - cf_bar.K[core]))),
    }
    if config.relation is not None:
        report["parallel_relation"] = parallel_relation(_relation(config), a, offset.epsilon).describe()
    if config.output is not None:
        report["output"] = save_grid(shifted, config.output, config.export_format)
    return report


def _problem_params(row: int, params: dict) -> dict:
    return {**basic_id(row, {k: v for k, v in params.items() if k in ("beta", "gamma")}).params, **params}


def _field(config: RunConfig, row: int, params: dict) -> ScalarField2D:
    if config.input is not None:
        return ScalarField2D.load(config.input)
    return exact_solution(row, params, config.grid or DEFAULT_FIELD_GRID)


def residual(config: RunConfig) -> dict:
    """Невязка натурального уравнения строки на поле из файла или на точном решении."""
    row = config.require("row")
    params = _problem_params(row, config.params)
    problem = scaled_basic_pde(row, params)
    field = _field(config, row, params)
    result = pde_residual(problem, field, eps_inv=config.tolerances.reciprocal)
    return {"pde": problem.describe(), "grid": field.header(), "residual": result.summary()}


def _initial_slope(values: np.ndarray, dy: float) -> np.ndarray:
    return (-3.0 * values[:, 0] + 4.0 * values[:, 1] - values[:, 2]) / (2.0 * dy)


def solve(config: RunConfig) -> dict:
    """
    Решение натурального уравнения строки: задача Дирихле методом Ньютона для Δ, Δ*
    или задача Коши схемой «чехарда» для Δ̄, Δ̄*. Данные берутся из поля --in или точного решения.
    """
    row = config.require("row")
    params = _problem_params(row, config.params)
    problem = scaled_basic_pde(row, params)
    data = _field(config, row, params)
    tol = config.tolerances
    report = {"pde": problem.describe()}
    if problem.kind.elliptic:
        field, solve_report = solve_elliptic(
            problem, data, tol_residual=tol.newton_residual, tol_update=tol.newton_update,
            max_iter=tol.newton_max_iter, max_halvings=tol.line_search_halvings, eps_inv=tol.reciprocal,
        )
        report["solver"] = solve_report.as_dict()
    else:
        spec = data.spec
        field = solve_hyperbolic(
            problem, data.values[:, 0], _initial_slope(data.values, spec.dv), (spec.u0, float(spec.u[-1])),
            float(spec.v[-1] - spec.v0), spec.dv, boundary=str(params.get("boundary", "outflow")),
            eps_inv=tol.reciprocal,
        )
        if problem.potential is not None:
            energy = hyperbolic_energy(problem, field)
            report["energy_drift"] = float(np.max(np.abs(energy - energy[0])) / max(abs(energy[0]), 1e-300))
    report["residual"] = pde_residual(problem, field, eps_inv=tol.reciprocal).summary()
    if config.input is None:
        report["max_error"] = float(np.max(np.abs(field.values - data.values)))
    if config.output is not None:
        report["output"] = field.save(config.output)
    return report


def export(config: RunConfig) -> dict:
    """Перевод поверхности в другой формат (csv, json, obj)."""
    grid = SurfaceGrid.load(config.input)
    path = save_grid(grid, config.require("output"), config.export_format)
    return {"output": path, "format": config.export_format, "grid": grid.spec.header()}


def _exemplar(row: int, params: dict, spec: GridSpec) -> ScalarField2D:
    """Точное решение строки либо для строк 4/5 решение натурального ОДУ вращательной поверхности."""
    if row not in (4, 5):
        return exact_solution(row, params, spec)
    if spec.u0 < 0:
        raise UsageError("Для строк 4/5 сетка эталона должна начинаться с x >= 0")
    du = spec.du / 10.0
    profile = rotational_natural_ode(float(params["beta"]), 1.0, 0.0, float(spec.u[-1]) + du, du)
    nu = CubicSpline(profile.u, profile.nu)(spec.u)
    return ScalarField2D(spec=spec, values=np.repeat(nu[:, None], spec.nv, axis=1))


def pipeline(config: RunConfig) -> dict:
    """
    Сквозной пример строки: уравнение, эталонное поле и его невязка, вращательная поверхность
    соотношения строки и её OBJ. Артефакты пишутся в каталог --out.
    """
    row = config.require("row")
    if row not in ROWS:
        raise UsageError(f"Номер строки должен быть от 1 до 10, получено {row}")
    params = _problem_params(row, {**PIPELINE_PARAMS.get(row, {}), **config.params})
    problem = scaled_basic_pde(row, params)
    field_grid = config.grid or (ROTATIONAL_FIELD_GRID if row in (4, 5) else DEFAULT_FIELD_GRID)
    field = _exemplar(row, params, field_grid)
    field_residual = pde_residual(problem, field, eps_inv=config.tolerances.reciprocal)

    relation = basic_relation(row, {k: v for k, v in params.items() if k in ("beta", "gamma")})
    surface = rotational_from_relation(relation, PIPELINE_SURFACE_GRID)
    _, cf = _curvature_report(surface, config)

    out_dir = Path(config.output or f"pipeline_row{row}")
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataIOError(f"Не удалось создать каталог {out_dir}: {exc}") from exc
    artifacts = {
        "field": field.save(out_dir / "field.csv"),
        "surface": surface.save(out_dir / "surface.csv"),
        "obj": surface.export_obj(out_dir / "surface.obj"),
    }
    logger.info(f"Строка {row}: {problem.pde}")
    return {
        "row": row,
        "title": basic_id(row, params).title,
        "pde": problem.describe(),
        "pde_text": problem.pde,
        "field_residual": field_residual.summary(),
        "relation": relation.describe(),
        "relation_residual": check_relation(cf, relation).summary(),
        "artifacts": artifacts,
    }


COMMAND_HANDLERS = {
    "analyze": analyze,
    "classify": classify_command,
    "generate": generate,
    "parallel": parallel,
    "residual": residual,
    "solve": solve,
    "export": export,
    "pipeline": pipeline,
}
