from pydantic import BaseModel, Field
from typing import Dict, List, Optional

# Every number is carried as a string so that rationals and large integers stay exact.


class AlgebraSection(BaseModel):
    dim: str = Field(description="Dimension of kQ/I.")
    gldim: str = Field(description="Global dimension: an integer, 'infinite' or 'unknown(>cap)'.")
    nilpotency_degree: str = Field(description="Least N with every path of length N in the ideal.")
    admissible: bool = Field(description="Whether the relations generate an admissible ideal.")
    basis_by_vertex_pair: Dict[str, str] = Field(
        default_factory=dict, description="Number of basis paths per 'source->target' pair."
    )
    pd_simples: List[str] = Field(default_factory=list, description="Projective dimension of each simple.")


class SiltingSection(BaseModel):
    verdict: str
    presilting: bool
    tilting: Optional[bool] = None
    summands: Optional[str] = Field(None, description="Number of primitive idempotents of End(P).")
    pd_h0: Optional[str] = Field(None, description="Projective dimension of H0(P).")


class EndSection(BaseModel):
    dim: str
    simples: str
    arrows: str = Field(description="Number of arrows of the Gabriel quiver.")
    gldim: str
    period: Optional[str] = Field(None, description="Period of the first periodic minimal resolution of a simple.")
    ext_one_total: Optional[str] = Field(None, description="Sum of dim Ext^1 over pairs of simples.")
    loewy_length: str
    pd_simples: List[str] = Field(default_factory=list)


class TorsionEntry(BaseModel):
    module: str
    classification: str
    torsion_dim: str
    torsion_free_dim: str


class BoundEntry(BaseModel):
    name: str
    hypothesis: str
    bound: Optional[str] = None
    status: str
    detail: str


class CheckEntry(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class Report(BaseModel):
    schema_version: str
    fixture: Optional[str] = None
    description: Optional[str] = None
    algebra: AlgebraSection
    silting: Optional[SiltingSection] = None
    end: Optional[EndSection] = None
    torsion: List[TorsionEntry] = Field(default_factory=list)
    bounds: List[BoundEntry] = Field(default_factory=list)
    checks: List[CheckEntry] = Field(default_factory=list)
    elapsed_ms: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks) and not any(
            bound.status == "falsified" for bound in self.bounds
        )


class ExamplesReport(BaseModel):
    schema_version: str
    reports: List[Report] = Field(default_factory=list)
    passed: bool
