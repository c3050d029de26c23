from weingarten.generators.curves import Meridian, MeridianSpec, SpaceCurveSpec, meridian_from_curvature
from weingarten.generators.gamma import gamma_invariants, gamma_surface, invariant_defect
from weingarten.generators.named import NAMED_SURFACES, named_surface
from weingarten.generators.reconstruct import ReconstructionReport, reconstruct_surface, reconstruct_with_report
from weingarten.generators.rotational import (
    MeridianCurvature,
    RotationalProfile,
    meridian_curvature_ode,
    natural_ode_coefficient,
    ratio_defect,
    rotational_basic45,
    rotational_from_relation,
    rotational_natural_ode,
)

__all__ = [
    "NAMED_SURFACES",
    "Meridian",
    "MeridianCurvature",
    "MeridianSpec",
    "ReconstructionReport",
    "RotationalProfile",
    "SpaceCurveSpec",
    "gamma_invariants",
    "gamma_surface",
    "invariant_defect",
    "meridian_curvature_ode",
    "meridian_from_curvature",
    "named_surface",
    "natural_ode_coefficient",
    "ratio_defect",
    "reconstruct_surface",
    "reconstruct_with_report",
    "rotational_basic45",
    "rotational_from_relation",
    "rotational_natural_ode",
]
