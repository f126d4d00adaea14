# app/services/diagram_service.py
"""
Structural operations on partitions and skew diagrams: parsing, conjugation,
rotation, normalization to basic form, decay into components, boundary paths
and the top/left removal used by the equality arguments.

All functions are pure; the value types are frozen pydantic models.
"""
import logging
from functools import lru_cache
from itertools import groupby
from typing import Iterator, List, Sequence, Tuple

import networkx as nx

from app.models.partition_models import BoxSpec, Partition, PathStats, SkewDiagram
from app.services.errors import MalformedBox, NotBasic, NotContained, TooShallow

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]
Parts = Tuple[int, ...]


# ---------------------- Text formats ----------------------

def parse_partition(text: str) -> Partition:
    return Partition.parse(text)


def parse_skew(text: str) -> SkewDiagram:
    return SkewDiagram.parse(text)


def parse_box(text: str) -> BoxSpec:
    """Reads "KxL": K columns, L rows."""
    k_text, sep, l_text = text.strip().lower().partition("x")
    try:
        if not sep:
            raise ValueError(text)
        return BoxSpec(k=int(k_text), l=int(l_text))
    except ValueError as e:
        raise MalformedBox(f"expected a box 'KxL' with positive K and L, got {text!r}") from e


# ---------------------- Partitions ----------------------

@lru_cache(maxsize=None)
def conjugate_parts(parts: Parts) -> Parts:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def conjugate(p: Partition) -> Partition:
    return Partition(parts=conjugate_parts(p.parts))


def distinct_parts(p: Partition) -> List[Tuple[int, int]]:
    """Distinct part values with their multiplicities, largest first: (7,7,5) -> [(7,2),(5,1)]."""
    return [(value, len(list(group))) for value, group in groupby(p.parts)]


def distinct_part_count(p: Partition) -> int:
    return len(set(p.parts))


def is_staircase(p: Partition) -> bool:
    return p.length >= 1 and p.parts == tuple(range(p.length, 0, -1))


def is_rectangle(p: Partition) -> bool:
    return distinct_part_count(p) == 1


# ---------------------- Skew diagrams ----------------------

def make_skew(outer: Partition, inner: Partition) -> SkewDiagram:
    if not outer.contains(inner):
        raise NotContained(f"{inner} is not contained in {outer}")
    return SkewDiagram(outer=outer, inner=inner)


def skew_cells(outer: Parts, inner: Parts) -> List[Cell]:
    return [
        (i + 1, j + 1)
        for i, row_end in enumerate(outer)
        for j in range(inner[i] if i < len(inner) else 0, row_end)
    ]


def cells(d: SkewDiagram) -> List[Cell]:
    """Cells (i, j) in row-major order, 1-based."""
    return skew_cells(d.outer.parts, d.inner.parts)


@lru_cache(maxsize=None)
def normalize_parts(outer: Parts, inner: Parts) -> Tuple[Parts, Parts]:
    """Deletes empty rows and columns; returns the basic (outer, inner) pair."""
    occupied = skew_cells(outer, inner)
    if not occupied:
        return (), ()
    row_index = {r: k for k, r in enumerate(sorted({i for i, _ in occupied}), start=1)}
    col_index = {c: k for k, c in enumerate(sorted({j for _, j in occupied}), start=1)}
    rows: dict = {}
    for i, j in occupied:
        rows.setdefault(row_index[i], []).append(col_index[j])
    new_outer = tuple(max(rows[r]) for r in sorted(rows))
    new_inner = tuple(min(rows[r]) - 1 for r in sorted(rows))
    while new_inner and new_inner[-1] == 0:
        new_inner = new_inner[:-1]
    return new_outer, new_inner


def from_cells(occupied: Sequence[Cell]) -> SkewDiagram:
    """Basic skew diagram of a cell set that forms a skew shape up to translation."""
    if not occupied:
        return SkewDiagram(outer=Partition())
    top = min(i for i, _ in occupied)
    left = min(j for _, j in occupied)
    rows: dict = {}
    for i, j in occupied:
        rows.setdefault(i - top, []).append(j - left + 1)
    height = max(rows) + 1
    outer = tuple(max(rows.get(r, [0])) for r in range(height))
    inner = tuple(min(rows[r]) - 1 if r in rows else outer[r] for r in range(height))
    normal_outer, normal_inner = normalize_parts(outer, inner)
    return SkewDiagram(outer=Partition(parts=normal_outer), inner=Partition(parts=normal_inner))


def normalize_basic(d: SkewDiagram) -> SkewDiagram:
    outer, inner = normalize_parts(d.outer.parts, d.inner.parts)
    if outer == d.outer.parts and inner == d.inner.parts:
        return d
    return SkewDiagram(outer=Partition(parts=outer), inner=Partition(parts=inner))


def is_basic(d: SkewDiagram) -> bool:
    """inner_i < outer_i and inner_i <= outer_(i+1) for every row of outer."""
    outer, inner = d.outer, d.inner
    return all(
        inner.part(i) < outer.part(i) and inner.part(i) <= outer.part(i + 1)
        for i in range(1, outer.length + 1)
    )


def _require_basic(d: SkewDiagram) -> None:
    if not is_basic(d):
        raise NotBasic(f"{d} has empty rows or columns; normalize it first")


@lru_cache(maxsize=None)
def rotate_parts(outer: Parts, inner: Parts) -> Tuple[Parts, Parts]:
    rows = len(outer)
    width = outer[0] if outer else 0
    padded = inner + (0,) * (rows - len(inner))
    new_outer = tuple(width - padded[rows - 1 - i] for i in range(rows))
    new_inner = tuple(width - outer[rows - 1 - i] for i in range(rows))
    while new_inner and new_inner[-1] == 0:
        new_inner = new_inner[:-1]
    return new_outer, new_inner


def rotate180(d: SkewDiagram) -> SkewDiagram:
    """180 degree rotation inside the bounding box; non-basic input is normalized first."""
    outer, inner = normalize_parts(d.outer.parts, d.inner.parts)
    new_outer, new_inner = rotate_parts(outer, inner)
    return SkewDiagram(outer=Partition(parts=new_outer), inner=Partition(parts=new_inner))


def conjugate_skew(d: SkewDiagram) -> SkewDiagram:
    return SkewDiagram(outer=conjugate(d.outer), inner=conjugate(d.inner))


def row_lengths(d: SkewDiagram) -> List[int]:
    return [d.outer.part(i) - d.inner.part(i) for i in range(1, d.outer.length + 1)]


def column_lengths(d: SkewDiagram) -> List[int]:
    outer_t = conjugate_parts(d.outer.parts)
    inner_t = conjugate_parts(d.inner.parts)
    return [outer_t[j] - (inner_t[j] if j < len(inner_t) else 0) for j in range(len(outer_t))]


def parts_and_heights(d: SkewDiagram) -> Tuple[Parts, Parts]:
    """Row lengths and column lengths as multisets, each sorted largest first."""
    return tuple(sorted(row_lengths(d), reverse=True)), tuple(sorted(column_lengths(d), reverse=True))


def is_partition_shape(d: SkewDiagram) -> bool:
    n = normalize_basic(d)
    return n.outer.length > 0 and n.inner.length == 0


def is_rotated_partition(d: SkewDiagram) -> bool:
    n = normalize_basic(d)
    return n.outer.length > 0 and is_rectangle(n.outer)


# ---------------------- Decay ----------------------

def decay_components(d: SkewDiagram) -> List[SkewDiagram]:
    """
    Splits d into maximal pieces sharing no row or column.
    Components come back basic, ordered by topmost row then leftmost column.
    """
    occupied = cells(normalize_basic(d))
    graph = nx.Graph()
    graph.add_nodes_from(occupied)
    cell_set = set(occupied)
    for i, j in occupied:
        if (i, j + 1) in cell_set:
            graph.add_edge((i, j), (i, j + 1))
        if (i + 1, j) in cell_set:
            graph.add_edge((i, j), (i + 1, j))
    groups = [sorted(component) for component in nx.connected_components(graph)]
    groups.sort(key=lambda group: (group[0][0], min(j for _, j in group)))
    return [from_cells(group) for group in groups]


def is_connected(d: SkewDiagram) -> bool:
    return len(decay_components(d)) <= 1


def compose_disjoint(upper: SkewDiagram, lower: SkewDiagram) -> SkewDiagram:
    """The decaying diagram upper x lower, with upper placed to the top right of lower."""
    a = normalize_basic(upper)
    b = normalize_basic(lower)
    if a.outer.length == 0:
        return b
    if b.outer.length == 0:
        return a
    shift = b.outer.part(1)
    outer = tuple(p + shift for p in a.outer.parts) + b.outer.parts
    inner = tuple(a.inner.part(i) + shift for i in range(1, a.outer.length + 1)) + b.inner.parts
    return SkewDiagram(outer=Partition(parts=outer), inner=Partition(parts=inner))


# ---------------------- Boundary lattice paths ----------------------

def _profile_segments(p: Partition) -> List[int]:
    """Alternating horizontal/vertical runs of p's lower boundary, walked from its lower left corner."""
    segments: List[int] = []
    previous = 0
    for value, multiplicity in reversed(distinct_parts(p)):
        segments.extend([value - previous, multiplicity])
        previous = value
    return segments


def path_stats(d: SkewDiagram) -> PathStats:
    """
    The outer path starts rightwards and follows outer; the inner path starts upwards,
    follows inner and ends with a rightward segment. Both run lower left to upper right.
    """
    _require_basic(d)
    if d.outer.length == 0:
        raise NotBasic("the empty diagram has no boundary paths")
    outer_segments = tuple(_profile_segments(d.outer))
    if d.inner.length == 0:
        inner_segments = (d.outer.length, d.outer.part(1))
        s_in = None
    else:
        inner_segments = (
            (d.outer.length - d.inner.length,)
            + tuple(_profile_segments(d.inner))
            + (d.outer.part(1) - d.inner.part(1),)
        )
        s_in = min(inner_segments)
    return PathStats(
        s_in=s_in,
        s_out=min(outer_segments),
        inner_segments=inner_segments,
        outer_segments=outer_segments,
    )


# ---------------------- Top / left removal ----------------------

def remove_top(d: SkewDiagram, i: int) -> SkewDiagram:
    """Deletes the top i cells of every column; the result is normalized."""
    if i < 1:
        raise ValueError(f"number of cells to remove must be positive, got {i}")
    n = normalize_basic(d)
    outer_t = conjugate_parts(n.outer.parts)
    inner_t = conjugate_parts(n.inner.parts)
    inner_t = inner_t + (0,) * (len(outer_t) - len(inner_t))
    shallow = [j + 1 for j, (o, s) in enumerate(zip(outer_t, inner_t)) if o - s < i]
    if shallow:
        raise TooShallow(f"columns {shallow} of {n} hold fewer than {i} cells")
    new_inner = conjugate_parts(tuple(s + i for s in inner_t))
    return normalize_basic(SkewDiagram(outer=n.outer, inner=Partition(parts=new_inner)))


def remove_left(d: SkewDiagram, i: int) -> SkewDiagram:
    """Deletes the leftmost i cells of every row; the result is normalized."""
    if i < 1:
        raise ValueError(f"number of cells to remove must be positive, got {i}")
    n = normalize_basic(d)
    shallow = [r for r, length in enumerate(row_lengths(n), start=1) if length < i]
    if shallow:
        raise TooShallow(f"rows {shallow} of {n} hold fewer than {i} cells")
    new_inner = tuple(n.inner.part(r) + i for r in range(1, n.outer.length + 1))
    return normalize_basic(SkewDiagram(outer=n.outer, inner=Partition(parts=new_inner)))


# ---------------------- Enumeration ----------------------

def enumerate_basic_skew_diagrams(max_cells: int, max_part: int, max_rows: int) -> Iterator[SkewDiagram]:
    """
    Every basic skew diagram with at most max_cells cells, first part at most max_part
    and at most max_rows rows, each exactly once.
    Rows are chosen top to bottom; the order is depth-first and deterministic.
    """
    for outer, inner in iter_basic_parts(max_cells, max_part, max_rows):
        yield SkewDiagram(outer=Partition(parts=outer), inner=Partition(parts=inner))


def iter_basic_parts(max_cells: int, max_part: int, max_rows: int) -> Iterator[Tuple[Parts, Parts]]:
    outer: List[int] = []
    inner: List[int] = []

    def extend(budget: int) -> Iterator[Tuple[Parts, Parts]]:
        if outer and inner[-1] == 0:
            yield tuple(outer), tuple(p for p in inner if p > 0)
        if len(outer) == max_rows or budget == 0:
            return
        if outer:
            # basic: the new row reaches the column where the previous row starts
            row_ends = range(max(1, inner[-1]), outer[-1] + 1)
        else:
            row_ends = range(1, max_part + 1)
        for row_end in row_ends:
            upper_start = inner[-1] if outer else row_end - 1
            for row_start in range(0, min(upper_start, row_end - 1) + 1):
                if row_end - row_start > budget:
                    continue
                outer.append(row_end)
                inner.append(row_start)
                yield from extend(budget - (row_end - row_start))
                outer.pop()
                inner.pop()

    yield from extend(max_cells)


def partitions_in_box(box: BoxSpec) -> Iterator[Partition]:
    """All partitions fitting in (k^l), in ascending lexicographic order."""
    def build(prefix: List[int], bound: int) -> Iterator[Parts]:
        yield tuple(prefix)
        if len(prefix) == box.l:
            return
        for value in range(1, bound + 1):
            prefix.append(value)
            yield from build(prefix, value)
            prefix.pop()

    for parts in sorted(build([], box.k)):
        yield Partition(parts=parts)
