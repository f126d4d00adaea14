# app/models/request_models.py

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from app.models.tableau_models import Decomposition, Term
from app.models.verdict_models import VerificationReport


class DecomposeRequest(BaseModel):
    """Request body for the skew character decomposition endpoint."""
    skew: str = Field(..., description="Skew diagram as 'outer/inner', e.g. '4,3,2,1/2'.")


class CoefficientRequest(BaseModel):
    """Request body for a single Littlewood-Richardson coefficient c(lam; mu, nu)."""
    lam: str = Field(..., description="Outer partition, e.g. '3,2,1'.")
    mu: str = Field(..., description="Inner partition.")
    nu: str = Field(..., description="Constituent partition.")


class ClassifyRequest(BaseModel):
    skew: str = Field(..., description="Skew diagram as 'outer/inner'.")


class EqualRequest(BaseModel):
    """Request body for comparing the characters of two skew diagrams."""
    first: str = Field(..., description="First skew diagram as 'outer/inner'.")
    second: str = Field(..., description="Second skew diagram as 'outer/inner'.")


class StarRequest(BaseModel):
    mu: str = Field(..., description="First factor.")
    nu: str = Field(..., description="Second factor.")
    box: str = Field(..., description="Rectangle as 'KxL' (K columns, L rows).")


class DualityRequest(BaseModel):
    mu: str = Field(..., description="Inner partition.")
    lam: str = Field(..., description="Outer partition; must fit in the box.")
    box: str = Field(..., description="Rectangle as 'KxL'.")


class VerifyRequest(BaseModel):
    """Bounds for the exhaustive equality check; unset fields fall back to the settings."""
    max_cells: Optional[int] = Field(None, ge=1, description="Largest cell count examined.")
    max_part: Optional[int] = Field(None, ge=1, description="Largest first part of the outer partition.")
    max_rows: Optional[int] = Field(None, ge=1, description="Largest number of rows.")


class OutputRecord(BaseModel):
    """
    Structured result shared by the command line and the HTTP API.
    Terms are listed in descending lexicographic order of nu; partitions are arrays of integers.
    """
    command: str = Field(..., description="Command that produced the record.")
    inputs: Dict[str, Any] = Field(default_factory=dict, description="Inputs as parsed.")
    terms: Optional[List[Term]] = Field(None, description="Decomposition terms, when the command produces one.")
    verdict: Optional[Dict[str, Any]] = Field(None, description="Predicates, coefficients or classification.")
    report: Optional[VerificationReport] = None

    def decomposition(self) -> Optional[Decomposition]:
        if self.terms is None:
            return None
        return Decomposition(terms=tuple(self.terms))
