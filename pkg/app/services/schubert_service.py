# app/services/schubert_service.py
"""
Complements inside a rectangle, the LR product restricted to the rectangle (the
product of Schubert classes, labelled by partitions), and the duality between
skew characters and that restricted product.
"""
import logging
from typing import List, Tuple

from app.models.partition_models import BoxSpec, Partition, SkewDiagram
from app.models.tableau_models import Decomposition
from app.services.diagram_service import partitions_in_box
from app.services.errors import DoesNotFit, NotContained
from app.services.lr_service import lr_product, skew_character

logger = logging.getLogger(__name__)


def fits_in_box(p: Partition, box: BoxSpec) -> bool:
    return box.fits(p)


def _require_fit(p: Partition, box: BoxSpec) -> None:
    if not box.fits(p):
        raise DoesNotFit(f"{p} does not fit in the {box} box")


def complement_in_box(p: Partition, box: BoxSpec) -> Partition:
    """(k^l)/p rotated by 180 degrees: result_i = k - p_(l+1-i)."""
    _require_fit(p, box)
    return Partition(parts=tuple(box.k - p.part(box.l + 1 - i) for i in range(1, box.l + 1)))


def star_product(mu: Partition, nu: Partition, box: BoxSpec) -> Decomposition:
    """[mu] * [nu] restricted to the constituents that fit in the box."""
    full = lr_product(mu, nu)
    return Decomposition(terms=tuple(t for t in full.terms if box.fits(t.nu)))


def duality_report(mu: Partition, lam: Partition, box: BoxSpec) -> List[Tuple[Partition, int, int]]:
    """
    For every alpha in the box, compares the coefficient of alpha in [lam/mu] with the
    coefficient of the complement of alpha in [mu] * [complement of lam].
    Returns the mismatches as (alpha, left, right).
    """
    _require_fit(lam, box)
    if not lam.contains(mu):
        raise NotContained(f"{mu} is not contained in {lam}")
    left = skew_character(SkewDiagram(outer=lam, inner=mu))
    right = star_product(mu, complement_in_box(lam, box), box)
    mismatches = []
    for alpha in partitions_in_box(box):
        lhs = left.coefficient(alpha) if left.size == alpha.weight else 0
        rhs = right.coefficient(complement_in_box(alpha, box))
        if lhs != rhs:
            mismatches.append((alpha, lhs, rhs))
    if mismatches:
        logger.warning(f"Duality fails for {lam}/{mu} in {box}: {len(mismatches)} mismatched coefficients")
    return mismatches


def duality_check(mu: Partition, lam: Partition, box: BoxSpec) -> bool:
    return not duality_report(mu, lam, box)
