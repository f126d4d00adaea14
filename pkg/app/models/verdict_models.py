# app/models/verdict_models.py
from enum import Enum
from functools import total_ordering
from typing import Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.models.partition_models import SkewDiagram
from app.models.tableau_models import Term


class MFReason(str, Enum):
    irreducible_partition = "IrreduciblePartition"
    rotated_partition = "RotatedPartition"
    case1_sin1 = "Case1_sin1"
    case2_sin2_dp3 = "Case2_sin2_dp3"
    case3_dp3_sout1 = "Case3_dp3_sout1"
    case4_dp2 = "Case4_dp2"
    brute_force = "BruteForce"
    not_mf = "NotMF"


class MFVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    multiplicity_free: bool
    reason: MFReason
    orientation: Optional[Literal["given", "rotated"]] = Field(
        None, description="Which orientation satisfied the structural test, when one did."
    )


@total_ordering
class CanonicalForm(BaseModel):
    """
    Representative of a diagram up to translation and rotation.
    Each connected component is replaced by the smaller of itself and its rotation;
    components are listed in ascending encoding order, so a decaying diagram is
    canonicalized one component at a time.
    """
    model_config = ConfigDict(frozen=True)

    components: Tuple[SkewDiagram, ...] = ()

    @property
    def representative(self) -> Optional[SkewDiagram]:
        return self.components[0] if len(self.components) == 1 else None

    def encoding(self) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
        return tuple((c.outer.parts, c.inner.parts) for c in self.components)

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.encoding() < other.encoding()

    def __str__(self) -> str:
        if not self.components:
            return "()/()"
        return " x ".join(str(c) for c in self.components)


# ---------------------- Verification report ----------------------

class VerificationBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_cells: int = Field(8, ge=1)
    max_part: int = Field(8, ge=1)
    max_rows: int = Field(8, ge=1)


class EqualityClass(BaseModel):
    """Multiplicity-free diagrams sharing one character, one entry per canonical form."""
    model_config = ConfigDict(frozen=True)

    terms: Tuple[Term, ...]
    members: Tuple[CanonicalForm, ...]


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["unpredicted_equality", "staircase_conjugates_differ"]
    first: SkewDiagram
    second: SkewDiagram


class VerificationReport(BaseModel):
    bounds: VerificationBounds
    diagrams_examined: int = 0
    distinct_forms: int = 0
    mf_count: int = Field(0, description="Multiplicity-free diagrams among those examined.")
    equality_classes: List[EqualityClass] = []
    nontrivial_classes: int = Field(0, description="Classes holding more than one canonical form.")
    violations: List[Violation] = []
    staircase_confirmations: int = 0
    staircase_pairs_checked: int = 0

    @property
    def confirmed(self) -> bool:
        return not self.violations
