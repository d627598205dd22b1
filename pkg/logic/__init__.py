from logic.formula import (
    FALSE,
    TRUE,
    UNBOUNDED,
    And,
    Bound,
    Constant,
    Formula,
    Historically,
    Implies,
    Not,
    Once,
    Or,
    Pre,
    Prop,
    Since,
    TimeModel,
    format_formula,
    formula_size,
    propositions,
)
from logic.parser import parse
from logic.dag import SubformulaDag, build_dag
from logic.desugar import desugar_for_dense

__all__ = [
    "FALSE",
    "TRUE",
    "UNBOUNDED",
    "And",
    "Bound",
    "Constant",
    "Formula",
    "Historically",
    "Implies",
    "Not",
    "Once",
    "Or",
    "Pre",
    "Prop",
    "Since",
    "SubformulaDag",
    "TimeModel",
    "build_dag",
    "desugar_for_dense",
    "format_formula",
    "formula_size",
    "parse",
    "propositions",
]
