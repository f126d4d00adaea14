# app/services/command_service.py
"""
Parses command inputs and wraps the combinatorics services into OutputRecords.
The command line and the HTTP routes both go through these functions, so the
two surfaces always agree.
"""
import logging
from typing import Optional

from app.models.partition_models import Partition, SkewDiagram
from app.models.request_models import OutputRecord
from app.models.verdict_models import VerificationBounds
from app.services.classifier_service import classify_mf, classify_mf_sweep
from app.services.diagram_service import parse_box, parse_partition, parse_skew
from app.services.equality_service import (
    characters_equal,
    necessary_conditions_check,
    predict_equal_mf,
    staircase_conjugate_equal,
    trivially_equal,
    verify_main_theorem,
)
from app.services.lr_service import lr_coefficient, skew_character
from app.services.schubert_service import duality_report, star_product

logger = logging.getLogger(__name__)


def _skew_inputs(d: SkewDiagram) -> dict:
    return {"outer": list(d.outer.parts), "inner": list(d.inner.parts)}


def _parts(p: Partition) -> list:
    return list(p.parts)


def decompose(skew_text: str) -> OutputRecord:
    d = parse_skew(skew_text)
    dec = skew_character(d)
    logger.debug(f"[{d}] = {dec}")
    return OutputRecord(command="decompose", inputs=_skew_inputs(d), terms=list(dec.terms))


def coefficient(lam_text: str, mu_text: str, nu_text: str) -> OutputRecord:
    lam, mu, nu = parse_partition(lam_text), parse_partition(mu_text), parse_partition(nu_text)
    value = lr_coefficient(lam, mu, nu)
    return OutputRecord(
        command="coef",
        inputs={"lam": _parts(lam), "mu": _parts(mu), "nu": _parts(nu)},
        verdict={"coefficient": value},
    )


def classify(skew_text: str) -> OutputRecord:
    d = parse_skew(skew_text)
    verdict = classify_mf(d)
    return OutputRecord(command="classify", inputs=_skew_inputs(d), verdict=verdict.model_dump(mode="json"))


def equal(first_text: str, second_text: str) -> OutputRecord:
    a, b = parse_skew(first_text), parse_skew(second_text)
    both_mf = classify_mf(a).multiplicity_free and classify_mf(b).multiplicity_free
    verdict = {
        "trivially_equal": trivially_equal(a, b),
        "staircase_conjugate_equal": staircase_conjugate_equal(a, b),
        "characters_equal": characters_equal(a, b),
        "necessary_conditions": necessary_conditions_check(a, b),
        "both_multiplicity_free": both_mf,
        # the prediction only speaks about multiplicity-free pairs
        "predict_equal_mf": predict_equal_mf(a, b) if both_mf else None,
    }
    return OutputRecord(
        command="equal",
        inputs={"first": _skew_inputs(a), "second": _skew_inputs(b)},
        verdict=verdict,
    )


def star(mu_text: str, nu_text: str, box_text: str) -> OutputRecord:
    mu, nu, box = parse_partition(mu_text), parse_partition(nu_text), parse_box(box_text)
    dec = star_product(mu, nu, box)
    return OutputRecord(
        command="schubert star",
        inputs={"mu": _parts(mu), "nu": _parts(nu), "box": {"k": box.k, "l": box.l}},
        terms=list(dec.terms),
    )


def duality(mu_text: str, lam_text: str, box_text: str) -> OutputRecord:
    mu, lam, box = parse_partition(mu_text), parse_partition(lam_text), parse_box(box_text)
    mismatches = duality_report(mu, lam, box)
    return OutputRecord(
        command="schubert duality",
        inputs={"mu": _parts(mu), "lam": _parts(lam), "box": {"k": box.k, "l": box.l}},
        verdict={
            "holds": not mismatches,
            "mismatches": [{"alpha": _parts(alpha), "left": left, "right": right} for alpha, left, right in mismatches],
        },
    )


def verify(bounds: VerificationBounds, jobs: int = 1, progress: bool = False) -> OutputRecord:
    report = verify_main_theorem(bounds, jobs=jobs, progress=progress)
    return OutputRecord(
        command="verify",
        inputs=bounds.model_dump(),
        verdict={"confirmed": report.confirmed},
        report=report,
    )


def sweep(box_size: int, progress: bool = False) -> OutputRecord:
    disagreements = classify_mf_sweep(box_size, progress=progress)
    return OutputRecord(
        command="sweep",
        inputs={"box_size": box_size},
        verdict={
            "agrees": not disagreements,
            "disagreements": [
                {"skew": _skew_inputs(d), "reason": verdict.reason.value, "brute_force": truth}
                for d, verdict, truth in disagreements
            ],
        },
    )


def bounds_from(
    max_cells: Optional[int], max_part: Optional[int], max_rows: Optional[int], defaults: VerificationBounds
) -> VerificationBounds:
    """Explicit values win over the configured defaults."""
    return VerificationBounds(
        max_cells=max_cells if max_cells is not None else defaults.max_cells,
        max_part=max_part if max_part is not None else defaults.max_part,
        max_rows=max_rows if max_rows is not None else defaults.max_rows,
    )
