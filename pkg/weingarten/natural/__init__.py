from weingarten.natural.metric import IntegralTable, natural_integrals, natural_metric
from weingarten.natural.nu_field import NuField
from weingarten.natural.pairs import (
    PAIR_KINDS,
    NaturalGauge,
    WeingartenPair,
    cmc_pair,
    load_pair,
    make_pair,
    minimal_pair,
    moebius_pair,
    pair_from_spec,
    table_pair,
)
from weingarten.natural.pde import (
    natural_metric_field,
    natural_ode_residual,
    natural_pde_residual,
    natural_geodesic_curvatures,
)
from weingarten.natural.reparameterize import (
    natural_functions,
    naturality_check,
    reparameterize_to_natural,
    solve_nu,
)

__all__ = [
    "PAIR_KINDS",
    "IntegralTable",
    "NaturalGauge",
    "NuField",
    "WeingartenPair",
    "cmc_pair",
    "load_pair",
    "make_pair",
    "minimal_pair",
    "moebius_pair",
    "natural_functions",
    "natural_integrals",
    "natural_metric",
    "natural_metric_field",
    "natural_ode_residual",
    "natural_pde_residual",
    "naturality_check",
    "pair_from_spec",
    "reparameterize_to_natural",
    "solve_nu",
    "table_pair",
    "natural_geodesic_curvatures",
]
