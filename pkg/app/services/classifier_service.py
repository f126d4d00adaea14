# app/services/classifier_service.py
"""
Structural multiplicity-freeness test for skew characters, with the brute-force
decomposition as fallback and as cross-check.
"""
import logging
from typing import List, Optional, Tuple

from tqdm import tqdm

from app.models.partition_models import SkewDiagram
from app.models.tableau_models import Decomposition
from app.models.verdict_models import MFReason, MFVerdict
from app.services.diagram_service import (
    distinct_part_count,
    enumerate_basic_skew_diagrams,
    is_connected,
    is_rectangle,
    normalize_basic,
    path_stats,
    rotate180,
)
from app.services.lr_service import skew_character

logger = logging.getLogger(__name__)


def is_multiplicity_free(dec: Decomposition) -> bool:
    return dec.is_multiplicity_free


def _structural_case(d: SkewDiagram) -> Optional[MFReason]:
    """
    For one orientation of a connected basic diagram: the first condition that makes the
    character multiplicity free, provided the inner partition is a rectangle.
    """
    if not is_rectangle(d.inner):
        return None
    stats = path_stats(d)
    dp = distinct_part_count(d.outer)
    if stats.s_in == 1:
        return MFReason.case1_sin1
    if stats.s_in == 2 and dp == 3:
        return MFReason.case2_sin2_dp3
    if dp == 3 and stats.s_out == 1:
        return MFReason.case3_dp3_sout1
    if dp == 2:
        return MFReason.case4_dp2
    return None


def classify_mf(d: SkewDiagram) -> MFVerdict:
    n = normalize_basic(d)
    if n.inner.length == 0:
        # [outer/()] is the irreducible [outer]; the empty diagram gives the trivial character
        return MFVerdict(multiplicity_free=True, reason=MFReason.irreducible_partition)
    if is_rectangle(n.outer):
        return MFVerdict(multiplicity_free=True, reason=MFReason.rotated_partition)

    if not is_connected(n):
        free = is_multiplicity_free(skew_character(n))
        logger.debug(f"{n} decays; brute force says multiplicity_free={free}")
        return MFVerdict(multiplicity_free=free, reason=MFReason.brute_force)

    for orientation, candidate in (("given", n), ("rotated", rotate180(n))):
        reason = _structural_case(candidate)
        if reason is not None:
            return MFVerdict(multiplicity_free=True, reason=reason, orientation=orientation)
    return MFVerdict(multiplicity_free=False, reason=MFReason.not_mf)


def classify_mf_sweep(box_size: int, progress: bool = False) -> List[Tuple[SkewDiagram, MFVerdict, bool]]:
    """
    Compares classify_mf with the brute-force decomposition for every basic skew diagram
    whose outer partition fits the box_size x box_size square. Returns the disagreements.
    """
    diagrams = list(enumerate_basic_skew_diagrams(box_size * box_size, box_size, box_size))
    logger.info(f"Cross-checking the classification on {len(diagrams)} diagrams inside ({box_size}^{box_size})")
    disagreements = []
    for d in tqdm(diagrams, disable=not progress, desc="classify", ascii=True):
        verdict = classify_mf(d)
        truth = is_multiplicity_free(skew_character(d))
        if verdict.multiplicity_free != truth:
            logger.warning(f"Classification disagrees with brute force on {d}: {verdict.reason.value} vs {truth}")
            disagreements.append((d, verdict, truth))
    logger.info(f"Classification sweep finished with {len(disagreements)} disagreements")
    return disagreements
