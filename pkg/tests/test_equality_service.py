from collections import defaultdict
from itertools import combinations

import pytest
from hypothesis import given

from app.models.partition_models import BoxSpec, Partition, SkewDiagram
from app.models.verdict_models import VerificationBounds
from app.services.diagram_service import (
    compose_disjoint,
    conjugate_skew,
    enumerate_basic_skew_diagrams,
    normalize_basic,
    partitions_in_box,
    parts_and_heights,
    rotate180,
)
from app.services.equality_service import (
    canonical_form,
    characters_equal,
    componentwise_trivially_equal,
    decay_into_partitions,
    equality_class_of,
    necessary_conditions_check,
    predict_equal_mf,
    staircase_conjugate_equal,
    trivially_equal,
    verify_main_theorem,
)
from app.services.errors import NotMultiplicityFree
from app.services.lr_service import skew_character
from conftest import skew_diagrams


def S(text):
    return SkewDiagram.parse(text)


def test_canonical_form_is_rotation_invariant():
    d = S("4,3,2,1/2")
    assert canonical_form(d) == canonical_form(rotate180(d))
    assert canonical_form(d).representative == d
    assert canonical_form(S("4,4,4,2/3,2,1")).representative == d


def test_canonical_form_moves_components_independently():
    a = compose_disjoint(S("1"), S("2"))
    b = compose_disjoint(S("2"), S("1"))
    assert a != b
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a).representative is None
    assert str(canonical_form(b)) == "(1)/() x (2)/()"


@given(skew_diagrams())
def test_trivial_equality_is_sound(d):
    assert trivially_equal(d, rotate180(d))
    assert characters_equal(d, rotate180(d))


def test_trivially_equal():
    assert not trivially_equal(S("4,3,2,1/2"), S("4,3,2,1/1,1"))
    assert trivially_equal(S("3,2/2"), S("3,1/1"))
    assert componentwise_trivially_equal(S("3,2/2"), S("3,1/1"))
    assert not componentwise_trivially_equal(S("3,2/2"), S("3"))


def test_staircase_conjugate_equal():
    assert staircase_conjugate_equal(S("4,3,2,1/2"), S("4,3,2,1/1,1"))
    assert staircase_conjugate_equal(S("3,2,1/1"), S("3,2,1/1"))
    assert not staircase_conjugate_equal(S("4,4,2/1"), S("3,3,2,1/1"))
    assert not staircase_conjugate_equal(S("4,3,2,1/2"), S("4,3,2,1/2"))


def test_characters_equal():
    assert characters_equal(S("4,3,2,1/2"), S("4,3,2,1/1,1"))
    assert not characters_equal(S("2,2/1"), S("3"))


def test_necessary_conditions_check():
    assert necessary_conditions_check(S("4,3,2,1/2"), S("4,3,2,1/1,1"))
    assert not necessary_conditions_check(S("2,2/1"), S("3"))
    d = S("5,3,3/2,1")
    assert necessary_conditions_check(d, rotate180(d))


def test_predict_equal_mf():
    assert predict_equal_mf(S("4,3,2,1/2"), S("4,3,2,1/1,1"))
    assert predict_equal_mf(S("4,4,4/2,2"), S("4,4,4/2,2"))
    assert not predict_equal_mf(S("4,4,4/2,2"), S("3,3,3,3/2,2"))
    assert not characters_equal(S("4,4,4/2,2"), S("3,3,3,3/2,2"))


def test_predict_equal_mf_sees_conjugates_through_rotation():
    a = rotate180(S("4,3,2,1/2"))
    assert predict_equal_mf(a, S("4,3,2,1/1,1"))


def test_predict_equal_mf_checks_precondition_on_request():
    with pytest.raises(NotMultiplicityFree):
        predict_equal_mf(S("3,2,1/2,1"), S("3,2,1/2,1"), check=True)
    assert predict_equal_mf(S("3,2,1/2,1"), S("3,2,1/2,1"))


def test_decay_into_partitions():
    assert decay_into_partitions(S("3,1/1"))
    assert decay_into_partitions(S("3,3/1"))
    assert not decay_into_partitions(S("3,2/1"))
    assert not decay_into_partitions(compose_disjoint(S("3,2/1"), S("1")))


def test_corpus_invariants():
    """Equal characters force equal parts and heights, and are trivial for diagrams decaying into partitions."""
    groups = defaultdict(list)
    for d in enumerate_basic_skew_diagrams(6, 6, 6):
        groups[skew_character(d).digest()].append(d)
    for members in groups.values():
        for a, b in combinations(members, 2):
            assert necessary_conditions_check(a, b)
            if decay_into_partitions(a):
                assert componentwise_trivially_equal(a, b), f"{a} vs {b}"
            if has_full_row_and_column(a):
                assert b in (normalize_basic(a), rotate180(a)), f"{a} vs {b}"


def has_full_row_and_column(d):
    """Some row spans the whole outer width and some column the whole outer height."""
    d = normalize_basic(d)
    parts, heights = parts_and_heights(d)
    return d.outer.part(1) in parts and d.outer.length in heights


def test_full_row_and_column_pins_the_diagram():
    assert not has_full_row_and_column(S("3,3,1/1"))
    assert not has_full_row_and_column(S("4,3,2,1/2"))
    d = S("3,3,2/1")
    assert has_full_row_and_column(d)
    for other in enumerate_basic_skew_diagrams(d.cell_count, 3, 3):
        if other.cell_count == d.cell_count and characters_equal(d, other):
            assert other in (d, rotate180(d)), str(other)


def test_verify_main_theorem_single_cell():
    report = verify_main_theorem(VerificationBounds(max_cells=1, max_part=1, max_rows=1))
    assert report.diagrams_examined == 1
    assert len(report.equality_classes) == 1
    assert report.violations == []
    assert report.staircase_pairs_checked == 1
    assert report.confirmed


def test_verify_main_theorem_small_staircase_conjugates_are_trivial():
    # (3,2,1)/(2) and (3,2,1)/(1,1) both decay into (1) and (2,1)
    assert trivially_equal(S("3,2,1/2"), S("3,2,1/1,1"))
    report = verify_main_theorem(VerificationBounds(max_cells=4, max_part=3, max_rows=3))
    assert report.confirmed
    assert report.staircase_confirmations == 0
    assert report.nontrivial_classes == 0
    found = equality_class_of(report, S("3,2,1/2"))
    assert found is not None
    assert found.members == (canonical_form(S("3,2,1/1,1")),)
    assert equality_class_of(report, S("3,2,1/2,1")) is None


def test_verify_main_theorem_finds_staircase_class():
    report = verify_main_theorem(VerificationBounds(max_cells=8, max_part=4, max_rows=4))
    assert report.confirmed
    assert report.staircase_confirmations >= 1
    assert report.nontrivial_classes >= 1
    a, b = S("4,3,2,1/2"), S("4,3,2,1/1,1")
    assert not trivially_equal(a, b)
    found = equality_class_of(report, a)
    assert found is not None
    assert canonical_form(b) in found.members
    assert len(found.members) >= 2


def test_verify_main_theorem_report_is_sorted():
    report = verify_main_theorem(VerificationBounds(max_cells=5, max_part=4, max_rows=4))
    firsts = [c.members[0] for c in report.equality_classes]
    assert firsts == sorted(firsts)
    assert all(list(c.members) == sorted(c.members) for c in report.equality_classes)
    assert report.mf_count <= report.diagrams_examined


def test_staircase_conjugates_share_characters():
    for l in (1, 2, 3, 4):
        staircase = Partition(parts=tuple(range(l, 0, -1)))
        for mu in partitions_in_box(BoxSpec(k=l, l=l)):
            if staircase.contains(mu):
                d = SkewDiagram(outer=staircase, inner=mu)
                assert characters_equal(d, conjugate_skew(d)), str(d)


def test_verify_main_theorem_does_not_depend_on_worker_count():
    bounds = VerificationBounds(max_cells=5, max_part=4, max_rows=4)
    single = verify_main_theorem(bounds, jobs=1)
    pooled = verify_main_theorem(bounds, jobs=2)
    assert single.model_dump_json() == pooled.model_dump_json()
