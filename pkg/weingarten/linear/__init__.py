from weingarten.linear.basic_pde import basic_pde, scaled_basic_pde
from weingarten.linear.classification import ROW_TITLES, BasicClassId, basic_id, basic_relation, classify
from weingarten.linear.relation import (
    LinearRelation,
    MoebiusCoeffs,
    RelationFit,
    check_relation,
    fit_relation,
    moebius_from_relation,
    parallel_relation,
    relation_from_moebius,
    relation_pair,
)

__all__ = [
    "BasicClassId",
    "LinearRelation",
    "MoebiusCoeffs",
    "ROW_TITLES",
    "RelationFit",
    "basic_id",
    "basic_pde",
    "basic_relation",
    "check_relation",
    "classify",
    "fit_relation",
    "moebius_from_relation",
    "parallel_relation",
    "relation_from_moebius",
    "relation_pair",
    "scaled_basic_pde",
]
