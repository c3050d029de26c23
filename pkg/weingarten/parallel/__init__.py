from weingarten.parallel.offset import (
    ParallelOffset,
    offset_sign,
    offset_surface,
    original_principal_curvatures,
    parallel_invariants,
    parallel_principal_curvatures,
)
from weingarten.parallel.verification import (
    parallel_gauge,
    parallel_weingarten_pair,
    verify_parallel_naturality,
    verify_pde_invariance,
)

__all__ = [
    "ParallelOffset",
    "offset_sign",
    "offset_surface",
    "original_principal_curvatures",
    "parallel_gauge",
    "parallel_invariants",
    "parallel_principal_curvatures",
    "parallel_weingarten_pair",
    "verify_parallel_naturality",
    "verify_pde_invariance",
]
