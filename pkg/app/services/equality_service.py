# app/services/equality_service.py
"""
Canonical forms up to translation and rotation, the staircase-conjugate predicate,
character equality, and the exhaustive harness that checks which multiplicity-free
skew characters coincide.
"""
import logging
import multiprocessing
import time
from collections import defaultdict
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from app.models.partition_models import SkewDiagram
from app.models.tableau_models import Decomposition
from app.models.verdict_models import (
    CanonicalForm,
    EqualityClass,
    VerificationBounds,
    VerificationReport,
    Violation,
)
from app.services.classifier_service import classify_mf
from app.services.diagram_service import (
    Parts,
    conjugate_skew,
    decay_components,
    enumerate_basic_skew_diagrams,
    is_staircase,
    normalize_basic,
    parts_and_heights,
    rotate180,
)
from app.services.errors import NotMultiplicityFree
from app.services.lr_service import character_digest, skew_character

logger = logging.getLogger(__name__)

__all__ = [
    "canonical_form",
    "trivially_equal",
    "componentwise_trivially_equal",
    "staircase_conjugate_equal",
    "characters_equal",
    "predict_equal_mf",
    "necessary_conditions_check",
    "decay_into_partitions",
    "enumerate_basic_skew_diagrams",
    "verify_main_theorem",
    "equality_class_of",
]


def _encode(d: SkewDiagram) -> Tuple[Parts, Parts]:
    return d.outer.parts, d.inner.parts


def canonical_form(d: SkewDiagram) -> CanonicalForm:
    """
    Each component is replaced by the smaller encoding of itself and its 180 degree
    rotation; components are sorted so they may move independently of each other.
    """
    chosen = []
    for component in decay_components(d):
        rotated = rotate180(component)
        chosen.append(min(component, rotated, key=_encode))
    chosen.sort(key=_encode)
    return CanonicalForm(components=tuple(chosen))


def trivially_equal(a: SkewDiagram, b: SkewDiagram) -> bool:
    return canonical_form(a) == canonical_form(b)


def componentwise_trivially_equal(a: SkewDiagram, b: SkewDiagram) -> bool:
    """The components of a and b match one to one up to translation and rotation."""
    forms_a = sorted(canonical_form(c) for c in decay_components(a))
    forms_b = sorted(canonical_form(c) for c in decay_components(b))
    return forms_a == forms_b


def staircase_conjugate_equal(a: SkewDiagram, b: SkewDiagram) -> bool:
    """True iff both have the same staircase outer partition and b is the conjugate of a."""
    na, nb = normalize_basic(a), normalize_basic(b)
    return na.outer == nb.outer and is_staircase(na.outer) and nb == conjugate_skew(na)


def characters_equal(a: SkewDiagram, b: SkewDiagram) -> bool:
    return skew_character(a) == skew_character(b)


def necessary_conditions_check(a: SkewDiagram, b: SkewDiagram) -> bool:
    """Equal characters force equal parts and equal heights, as multisets."""
    return parts_and_heights(normalize_basic(a)) == parts_and_heights(normalize_basic(b))


def predict_equal_mf(a: SkewDiagram, b: SkewDiagram, check: bool = False) -> bool:
    """
    The equality the classification of multiplicity-free skew characters allows:
    the diagrams agree up to translation and rotation (componentwise for decaying
    diagrams), or one is the conjugate of the other inside a common staircase,
    after rotating either of them.
    """
    if check:
        for d in (a, b):
            verdict = classify_mf(d)
            if not verdict.multiplicity_free:
                raise NotMultiplicityFree(f"[{d}] is not multiplicity free ({verdict.reason.value})")
    if trivially_equal(a, b):
        return True
    orientations_a = (normalize_basic(a), rotate180(a))
    orientations_b = (normalize_basic(b), rotate180(b))
    return any(staircase_conjugate_equal(x, y) for x in orientations_a for y in orientations_b)


def decay_into_partitions(d: SkewDiagram) -> bool:
    """True iff every component is a partition or a rotated partition."""
    for component in decay_components(d):
        rotated = rotate180(component)
        if component.inner.length and rotated.inner.length:
            return False
    return True


# ---------------------- Verification harness ----------------------

def _digest_worker(key: Tuple[Parts, Parts]) -> Tuple[Tuple[Parts, int], ...]:
    return character_digest(*key)


def _digest_all(
    keys: Sequence[Tuple[Parts, Parts]], jobs: int, progress: bool
) -> List[Tuple[Tuple[Parts, int], ...]]:
    """Character digests in input order; the order does not depend on the worker count."""
    bar = dict(total=len(keys), disable=not progress, desc="decompose", ascii=True)
    if jobs <= 1:
        return [_digest_worker(key) for key in tqdm(keys, **bar)]
    chunksize = max(1, len(keys) // (jobs * 16))
    with multiprocessing.Pool(processes=jobs) as pool:
        return list(tqdm(pool.imap(_digest_worker, keys, chunksize=chunksize), **bar))


def _staircase_diagrams(diagrams: Sequence[SkewDiagram]) -> Iterator[SkewDiagram]:
    for d in diagrams:
        if is_staircase(d.outer):
            yield d


def verify_main_theorem(
    bounds: VerificationBounds, jobs: int = 1, progress: bool = False
) -> VerificationReport:
    """
    Enumerates every basic skew diagram within bounds, groups the multiplicity-free ones
    by character and checks each pair in a group against predict_equal_mf. Conversely,
    every staircase diagram must share its character with its conjugate.
    Violations are reported, never raised.
    """
    started = time.perf_counter()
    diagrams = list(enumerate_basic_skew_diagrams(bounds.max_cells, bounds.max_part, bounds.max_rows))
    logger.info(f"Verifying equality of multiplicity-free skew characters on {len(diagrams)} diagrams, bounds {bounds.model_dump()}")

    # one decomposition per canonical form: rotation and component moves do not change the character
    first_of_form: Dict[CanonicalForm, SkewDiagram] = {}
    form_of: List[CanonicalForm] = []
    for d in diagrams:
        form = canonical_form(d)
        form_of.append(form)
        first_of_form.setdefault(form, d)
    forms = list(first_of_form)
    digests = _digest_all([_encode(first_of_form[f]) for f in forms], jobs, progress)
    digest_of: Dict[CanonicalForm, Tuple[Tuple[Parts, int], ...]] = dict(zip(forms, digests))

    mf_count = sum(1 for form in form_of if all(coeff == 1 for _, coeff in digest_of[form]))
    classes: Dict[Tuple[Tuple[Parts, int], ...], List[CanonicalForm]] = defaultdict(list)
    for form in forms:
        digest = digest_of[form]
        if all(coeff == 1 for _, coeff in digest):
            classes[digest].append(form)

    violations: List[Violation] = []
    staircase_confirmations = 0
    equality_classes: List[EqualityClass] = []
    for digest, members in classes.items():
        members.sort()
        equality_classes.append(
            EqualityClass(terms=Decomposition.from_counts(dict(digest)).terms, members=tuple(members))
        )
        for first, second in combinations(members, 2):
            a, b = first_of_form[first], first_of_form[second]
            if not predict_equal_mf(a, b):
                logger.warning(f"Unpredicted equality of multiplicity-free characters: {a} and {b}")
                violations.append(Violation(kind="unpredicted_equality", first=a, second=b))
            else:
                staircase_confirmations += 1
                logger.debug(f"Staircase-conjugate equality confirmed: {a} and {b}")
    equality_classes.sort(key=lambda c: c.members[0])

    # converse: conjugation inside a staircase never changes the character
    staircase_pairs = 0
    for d in _staircase_diagrams(diagrams):
        partner = conjugate_skew(d)
        staircase_pairs += 1
        partner_form = canonical_form(partner)
        partner_digest = digest_of.get(partner_form) or character_digest(*_encode(partner))
        if partner_digest != digest_of[canonical_form(d)]:
            logger.warning(f"Staircase conjugates with different characters: {d} and {partner}")
            violations.append(Violation(kind="staircase_conjugates_differ", first=d, second=partner))

    violations.sort(key=lambda v: (v.kind, _encode(v.first), _encode(v.second)))
    report = VerificationReport(
        bounds=bounds,
        diagrams_examined=len(diagrams),
        distinct_forms=len(forms),
        mf_count=mf_count,
        equality_classes=equality_classes,
        nontrivial_classes=sum(1 for c in equality_classes if len(c.members) > 1),
        violations=violations,
        staircase_confirmations=staircase_confirmations,
        staircase_pairs_checked=staircase_pairs,
    )
    logger.info(
        f"Verification finished in {time.perf_counter() - started:.1f}s: {report.mf_count} multiplicity-free diagrams, "
        f"{report.nontrivial_classes} nontrivial classes, {len(report.violations)} violations"
    )
    return report


def equality_class_of(report: VerificationReport, d: SkewDiagram) -> Optional[EqualityClass]:
    """The equality class of the report holding d, if d is multiplicity free and within bounds."""
    form = canonical_form(d)
    for equality_class in report.equality_classes:
        if form in equality_class.members:
            return equality_class
    return None
