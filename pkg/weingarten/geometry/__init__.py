from weingarten.geometry.curvature import (
    analyze_surface,
    codazzi_metric,
    codazzi_residual,
    curvature_field,
    gauss_residual,
    regularity_type,
    umbilic_scan,
)
from weingarten.geometry.fields import CurvatureField, FormField, ResidualField
from weingarten.geometry.forms import first_fundamental_form, second_fundamental_form
from weingarten.geometry.grid import GridSpec, SurfaceGrid

__all__ = [
    "CurvatureField",
    "FormField",
    "GridSpec",
    "ResidualField",
    "SurfaceGrid",
    "analyze_surface",
    "codazzi_metric",
    "codazzi_residual",
    "curvature_field",
    "first_fundamental_form",
    "gauss_residual",
    "regularity_type",
    "second_fundamental_form",
    "umbilic_scan",
]
