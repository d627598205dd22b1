from oracle.structures import DiscreteTrace, HomStructure, common_denominator, grid_denominator
from oracle.pointy import eval_pointy_discrete, eval_pointy_discrete_trace
from oracle.pointfree import eval_pointfree, eval_pointfree_cells
from oracle.flattening import check_continuity, check_flattening
from oracle.compass import (
    Diamond,
    MAnd,
    MclFormula,
    MNeg,
    MOr,
    MProp,
    MTop,
    Relation,
    box,
    check_mcl_equivalences,
    e_or_ebar,
    eval_mcl,
    to_compass,
)

__all__ = [
    "Diamond",
    "DiscreteTrace",
    "HomStructure",
    "MAnd",
    "MNeg",
    "MOr",
    "MProp",
    "MTop",
    "MclFormula",
    "Relation",
    "box",
    "check_continuity",
    "check_flattening",
    "check_mcl_equivalences",
    "common_denominator",
    "e_or_ebar",
    "eval_mcl",
    "eval_pointfree",
    "eval_pointfree_cells",
    "eval_pointy_discrete",
    "eval_pointy_discrete_trace",
    "grid_denominator",
    "to_compass",
]
