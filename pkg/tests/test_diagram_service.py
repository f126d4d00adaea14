import pytest
from hypothesis import given

from app.models.partition_models import BoxSpec, Partition, SkewDiagram
from app.services.diagram_service import (
    cells,
    compose_disjoint,
    conjugate,
    conjugate_skew,
    decay_components,
    distinct_part_count,
    distinct_parts,
    enumerate_basic_skew_diagrams,
    is_basic,
    is_connected,
    is_partition_shape,
    is_rotated_partition,
    is_staircase,
    make_skew,
    normalize_basic,
    parse_box,
    parse_partition,
    parse_skew,
    partitions_in_box,
    parts_and_heights,
    path_stats,
    remove_left,
    remove_top,
    rotate180,
)
from app.services.errors import (
    MalformedBox,
    MalformedPartition,
    MalformedSkew,
    NotBasic,
    NotContained,
    TooShallow,
)
from conftest import partitions, skew_diagrams


def P(*parts):
    return Partition.of(*parts)


def S(text):
    return parse_skew(text)


def test_parse_partition_strips_trailing_zeros():
    assert parse_partition("4,3,3,0,0") == P(4, 3, 3)
    assert parse_partition("") == Partition()
    assert parse_partition("(3, 1)") == P(3, 1)


@pytest.mark.parametrize("text", ["3,4", "2,a", "2,-1", "1,,1"])
def test_parse_partition_rejects_malformed_text(text):
    with pytest.raises(MalformedPartition):
        parse_partition(text)


def test_partition_model_rejects_increasing_parts():
    with pytest.raises(ValueError):
        Partition(parts=(1, 2))


def test_parse_skew():
    d = parse_skew("4,3,2,1/2")
    assert d.outer == P(4, 3, 2, 1)
    assert d.inner == P(2)
    assert parse_skew("3,2") == parse_skew("3,2/")
    assert str(d) == "(4,3,2,1)/(2)"


def test_skew_diagram_serializes_as_integer_arrays():
    d = parse_skew("4,3,2,1/2")
    assert d.model_dump() == {"outer": [4, 3, 2, 1], "inner": [2]}
    assert SkewDiagram.model_validate(d.model_dump()) == d
    assert SkewDiagram.model_validate("4,3,2,1/2") == d
    assert parse_skew("2,1").model_dump() == {"outer": [2, 1], "inner": []}


def test_parse_skew_errors():
    with pytest.raises(NotContained):
        parse_skew("2/3")
    with pytest.raises(MalformedSkew):
        parse_skew("3/2/1")
    with pytest.raises(NotContained):
        make_skew(P(2, 1), P(1, 1, 1))


def test_parse_box():
    assert parse_box("2x3") == BoxSpec(k=2, l=3)
    for text in ("2by3", "0x2", "x"):
        with pytest.raises(MalformedBox):
            parse_box(text)


def test_conjugate_known_values():
    assert conjugate(P(4, 2, 1)) == P(3, 2, 1, 1)
    assert conjugate(P(3, 3)) == P(2, 2, 2)
    assert conjugate(Partition()) == Partition()


@given(partitions())
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).weight == p.weight


def test_distinct_parts():
    assert distinct_parts(P(7, 7, 5)) == [(7, 2), (5, 1)]
    assert distinct_part_count(P(4, 4, 2, 1, 1)) == 3
    assert distinct_part_count(Partition()) == 0


def test_is_staircase():
    assert is_staircase(P(3, 2, 1))
    assert is_staircase(P(1))
    assert not is_staircase(P(3, 2))
    assert not is_staircase(Partition())


def test_cells_are_row_major_and_one_based():
    assert cells(S("3,2/1")) == [(1, 2), (1, 3), (2, 1), (2, 2)]
    assert S("3,2/1").cell_count == 4


def test_normalize_basic_removes_empty_columns_and_rows():
    assert normalize_basic(S("3,1/2")) == S("2,1/1")
    assert normalize_basic(S("2,2,1/2,1")) == S("2,1/1")
    assert normalize_basic(S("2,2/2,2")) == SkewDiagram(outer=Partition())
    assert not is_basic(S("3,1/2"))
    assert is_basic(S("3,3/1"))


@given(skew_diagrams())
def test_normalize_basic_is_idempotent(d):
    n = normalize_basic(d)
    assert is_basic(n)
    assert normalize_basic(n) == n
    assert n.cell_count == d.cell_count


def test_rotate180_known_values():
    assert rotate180(S("3,1")) == S("3,3/2")
    assert rotate180(S("3,2/1")) == S("3,2/1")
    assert rotate180(S("4,4,4/2,2")) == S("4,2,2")
    assert rotate180(S("3,1/2")) == S("2,1/1")


@given(skew_diagrams())
def test_rotate180_twice_is_the_basic_form(d):
    assert rotate180(rotate180(d)) == normalize_basic(d)
    assert parts_and_heights(rotate180(d)) == parts_and_heights(normalize_basic(d))


def test_conjugate_skew():
    assert conjugate_skew(S("3,1/1")) == S("2,1,1/1")


@given(skew_diagrams())
def test_conjugate_skew_swaps_parts_and_heights(d):
    parts, heights = parts_and_heights(d)
    assert parts_and_heights(conjugate_skew(d)) == (heights, parts)


def test_parts_and_heights():
    assert parts_and_heights(S("3,2,1/1")) == ((2, 2, 1), (2, 2, 1))
    assert parts_and_heights(S("2,2/1")) == ((2, 1), (2, 1))
    assert parts_and_heights(S("3")) == ((3,), (1, 1, 1))


def test_decay_components():
    assert decay_components(S("3,1/1")) == [S("2"), S("1")]
    assert decay_components(S("2,2/1")) == [S("2,2/1")]
    assert not is_connected(S("2,1/1"))
    assert is_connected(S("3,2/1"))


def test_compose_disjoint_places_the_first_diagram_top_right():
    assert compose_disjoint(S("2"), S("1")) == S("3,1/1")
    assert compose_disjoint(S("1"), S("1")) == S("2,1/1")
    assert compose_disjoint(SkewDiagram(outer=Partition()), S("2,1")) == S("2,1")


@given(skew_diagrams(max_part=3, max_rows=3), skew_diagrams(max_part=3, max_rows=3))
def test_compose_disjoint_components(a, b):
    composed = compose_disjoint(a, b)
    assert composed.cell_count == a.cell_count + b.cell_count
    expected = decay_components(a) + decay_components(b)
    assert sorted(c.text for c in decay_components(composed)) == sorted(c.text for c in expected)


def test_partition_shapes():
    assert is_partition_shape(S("3,2"))
    assert is_partition_shape(S("3,2,1/3"))
    assert is_rotated_partition(S("3,3/1"))
    assert not is_rotated_partition(S("3,2/1"))


def test_path_stats_single_inner_segment():
    stats = path_stats(S("3,2/1"))
    assert stats.outer_segments == (2, 1, 1, 1)
    assert stats.inner_segments == (1, 1, 1, 2)
    assert stats.s_in == 1
    assert stats.s_out == 1


def test_path_stats_two_part_rectangles():
    stats = path_stats(S("5,5,3,3/2,2"))
    assert stats.outer_segments == (3, 2, 2, 2)
    assert stats.inner_segments == (2, 2, 2, 3)
    assert stats.s_in == 2
    assert stats.s_out == 2


def test_path_stats_straight_shape_has_no_inner_minimum():
    stats = path_stats(S("3,1"))
    assert stats.s_in is None
    assert stats.inner_segments == (2, 3)


def test_path_stats_requires_basic_diagram():
    with pytest.raises(NotBasic):
        path_stats(S("3,1/2"))


def test_remove_top():
    assert remove_top(S("4,4,4/2,2"), 1) == normalize_basic(S("4,4/2,2"))
    assert remove_top(S("2,2"), 1) == S("2")
    with pytest.raises(TooShallow):
        remove_top(S("4,4,4/2,2"), 2)


def test_remove_left():
    assert remove_left(S("3,2/1"), 1) == S("2,1/1")
    with pytest.raises(TooShallow):
        remove_left(S("3,1"), 2)


@given(skew_diagrams(max_part=4, max_rows=4))
def test_remove_left_is_remove_top_conjugated(d):
    n = normalize_basic(d)
    try:
        top = remove_top(conjugate_skew(n), 1)
    except TooShallow:
        with pytest.raises(TooShallow):
            remove_left(n, 1)
        return
    assert remove_left(n, 1) == normalize_basic(conjugate_skew(top))


def test_enumerate_basic_skew_diagrams_small_bounds():
    assert list(enumerate_basic_skew_diagrams(1, 2, 2)) == [S("1")]
    assert list(enumerate_basic_skew_diagrams(2, 2, 2)) == [S("1"), S("1,1"), S("2"), S("2,1/1")]


def test_enumerate_basic_skew_diagrams_is_exhaustive_and_basic():
    found = list(enumerate_basic_skew_diagrams(4, 3, 3))
    assert len(found) == len(set(found))
    assert all(is_basic(d) for d in found)
    assert all(d.cell_count <= 4 and d.outer.part(1) <= 3 and d.outer.length <= 3 for d in found)
    # brute force: every skew diagram within bounds whose basic form is itself
    expected = set()
    for outer in partitions_in_box(BoxSpec(k=3, l=3)):
        for inner in partitions_in_box(BoxSpec(k=3, l=3)):
            if outer.contains(inner):
                d = SkewDiagram(outer=outer, inner=inner)
                if 0 < d.cell_count <= 4 and is_basic(d):
                    expected.add(d)
    assert set(found) == expected


def test_partitions_in_box():
    listed = [p.parts for p in partitions_in_box(BoxSpec(k=2, l=2))]
    assert listed == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
    assert len(list(partitions_in_box(BoxSpec(k=3, l=3)))) == 20
