from decimal import Decimal
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

TraceMode = Literal["discrete", "dense"]


class RunConfig(BaseModel):
    """Options of one ``monitor`` run"""
    mode: TraceMode = Field("discrete", description="Time model of the input trace")
    formula: str = Field(..., min_length=1, description="Past-MTL formula text")
    input: str = Field("-", description="CSV path, or '-' for stdin")
    chunk_rows: int = Field(64, ge=1, description="Dense rows batched into one chunk")
    t0: Decimal = Field(Decimal(0), description="Dense time origin")
    strong_historically: bool = Field(False, description="Treat steps before the trace as violations")
    output: Optional[str] = Field(None, description="Output path; stdout when unset")


class BenchSpec(BaseModel):
    """Benchmark property, trace shape and generator knobs"""
    kind: Literal["qpr", "pandq", "delay"] = Field(..., description="Benchmark property")
    a: int = Field(0, ge=0, description="Lower bound (ignored by delay)")
    b: int = Field(..., ge=1, description="Upper bound")
    length: int = Field(..., ge=1, description="Number of generated steps")
    seed: int = Field(0, description="Seed of the qpr generator")
    p_density: float = Field(0.5, ge=0.0, le=1.0, description="qpr: probability that p holds")
    q_density: float = Field(0.1, ge=0.0, le=1.0, description="qpr: probability that q holds")
    r_density: float = Field(0.1, ge=0.0, le=1.0, description="qpr: probability that r holds")
    mode: TraceMode = Field("discrete", description="Engine the trace is run through")
    chunk_rows: int = Field(64, ge=1, description="Dense rows batched into one chunk")
    stutter: int = Field(1, ge=1, description="Steps each generated valuation is held for")
    max_run: int = Field(1000, ge=1, description="Dense: longest stuttering run merged into one segment")

    @model_validator(mode="after")
    def _bounds_ordered(self):
        if self.kind != "delay" and self.a > self.b:
            raise ValueError(f"lower bound {self.a} exceeds upper bound {self.b}")
        return self

    @property
    def formula_text(self) -> str:
        if self.kind == "delay":
            return f"p since[{self.b}:{self.b}] q"
        if self.kind == "pandq":
            return f"p since[{self.a}:{self.b}] q"
        return f"historically ((r && !q && once q) -> (p since[{self.a}:{self.b}] q))"

    @property
    def label(self) -> str:
        if self.kind == "delay":
            return f"delay({self.b})"
        return f"{self.kind}({self.a},{self.b})"


class BenchResult(BaseModel):
    """Timing and state-size measurements of one benchmark run"""
    label: str
    formula: str
    mode: TraceMode
    length: int = Field(..., description="Generated steps (time units in dense mode)")
    chunk_rows: int
    stutter: int
    max_run: int
    seconds: float = Field(..., ge=0.0, description="Wall time of the evaluation loop")
    steps_per_second: float = Field(..., ge=0.0)
    peak_state: int = Field(..., ge=0, description="Largest number of stored intervals or periods")
    true_outputs: int = Field(..., ge=0, description="Steps (or time units) where the property held")


class CheckMismatch(BaseModel):
    """One engine-vs-reference disagreement, minimized"""
    check: Literal["discrete", "dense"]
    formula: str
    detail: str = Field(..., description="Where and how the evaluators disagree")
    trace: List[Dict[str, Any]] = Field(default_factory=list, description="Minimized input rows")
    cuts: List[str] = Field(default_factory=list, description="Chunk boundaries of the failing dense run")


class CheckReport(BaseModel):
    """Outcome of a differential checking session"""
    seed: int
    trials: int
    formulas: List[str] = Field(default_factory=list)
    instances: int = Field(0, ge=0, description="Instances compared")
    mismatches: List[CheckMismatch] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches
