# app/services/lr_service.py
"""
Littlewood-Richardson coefficients by lattice-word tableau enumeration, full
skew character decompositions, and two independent oracles (the monomial
expansion of the skew Schur function and standard tableau counts).
"""
import logging
import math
from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple, Union

from app.models.partition_models import Partition, SkewDiagram
from app.models.tableau_models import Decomposition, LRTableau, is_lattice_word
from app.services.diagram_service import (
    Parts,
    column_lengths,
    compose_disjoint,
    conjugate_parts,
    normalize_basic,
    normalize_parts,
)

logger = logging.getLogger(__name__)

__all__ = [
    "is_lattice_word",
    "lr_coefficient",
    "skew_character",
    "enumerate_lr_tableaux",
    "skew_schur_monomials",
    "schur_monomials",
    "syt_count",
    "lr_product",
    "induction_product",
    "max_constituent",
    "top_row_constituents",
]


# ---------------------- LR filling search ----------------------

def _reading_order(outer: Parts, inner: Parts) -> Tuple[List[int], List[int]]:
    """
    Lays the cells out in reverse row word order (rows top to bottom, right to left)
    and returns, for every position, the position of the cell above and of the cell
    to the right (-1 when absent). Both are always earlier in the order.
    """
    position: Dict[Tuple[int, int], int] = {}
    for i, row_end in enumerate(outer):
        row_start = inner[i] if i < len(inner) else 0
        for j in range(row_end - 1, row_start - 1, -1):
            position[(i, j)] = len(position)
    above = [-1] * len(position)
    right = [-1] * len(position)
    for (i, j), k in position.items():
        above[k] = position.get((i - 1, j), -1)
        right[k] = position.get((i, j + 1), -1)
    return above, right


def _search_lr_fillings(
    outer: Parts,
    inner: Parts,
    visit: Callable[[List[int], List[int]], None],
    content_bound: Optional[Parts] = None,
) -> None:
    """
    Backtracks over semistandard fillings in reverse row word order, keeping the word
    a lattice word at every prefix. visit(filling, counts) is called on each complete
    LR filling; counts[v] is the number of entries equal to v.
    """
    above, right = _reading_order(outer, inner)
    total = len(above)
    filling = [0] * total
    counts = [0] * (total + 2)
    counts[0] = total + 1  # value 1 is always lattice-admissible

    def place(k: int, used: int) -> None:
        if k == total:
            visit(filling, counts)
            return
        low = filling[above[k]] + 1 if above[k] >= 0 else 1
        high = used + 1
        if right[k] >= 0 and filling[right[k]] < high:
            high = filling[right[k]]
        for value in range(low, high + 1):
            if counts[value] >= counts[value - 1]:
                continue
            if content_bound is not None and (value > len(content_bound) or counts[value] >= content_bound[value - 1]):
                continue
            filling[k] = value
            counts[value] += 1
            place(k + 1, used if value <= used else value)
            counts[value] -= 1
        filling[k] = 0

    place(0, 0)


@lru_cache(maxsize=None)
def _character_counts(outer: Parts, inner: Parts) -> Tuple[Tuple[Parts, int], ...]:
    """Content -> number of LR fillings, for a basic (outer, inner) pair."""
    found: Counter = Counter()

    def record(filling: List[int], counts: List[int]) -> None:
        content = []
        for value in range(1, len(counts)):
            if counts[value] == 0:
                break
            content.append(counts[value])
        found[tuple(content)] += 1

    _search_lr_fillings(outer, inner, record)
    return tuple(found.items())


def skew_character(d: SkewDiagram) -> Decomposition:
    """[outer/inner] = sum over nu of c(outer; inner, nu) [nu]; the empty diagram gives {(): 1}."""
    outer, inner = normalize_parts(d.outer.parts, d.inner.parts)
    if not outer:
        return Decomposition.trivial()
    return Decomposition.from_counts(dict(_character_counts(outer, inner)))


def character_digest(outer: Parts, inner: Parts) -> Tuple[Tuple[Parts, int], ...]:
    """Sorted (nu, coefficient) pairs of a skew character, computed from plain tuples."""
    outer, inner = normalize_parts(outer, inner)
    if not outer:
        return (((), 1),)
    return tuple(sorted(_character_counts(outer, inner), reverse=True))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c(lam; mu, nu): 0 when mu is not inside lam or the sizes do not add up."""
    if not lam.contains(mu) or lam.weight != mu.weight + nu.weight:
        return 0
    return skew_character(SkewDiagram(outer=lam, inner=mu)).coefficient(nu)


def enumerate_lr_tableaux(d: SkewDiagram, nu: Partition) -> List[LRTableau]:
    """All LR tableaux of shape d and content nu, in row-major lexicographic order."""
    if nu.weight != d.cell_count:
        return []
    outer, inner = d.outer.parts, d.inner.parts
    rows = [(inner[i] if i < len(inner) else 0, row_end) for i, row_end in enumerate(outer)]
    fillings: List[Tuple[Tuple[int, ...], ...]] = []

    def record(filling: List[int], counts: List[int]) -> None:
        if any(counts[v + 1] != part for v, part in enumerate(nu.parts)):
            return
        grid, k = [], 0
        for start, end in rows:
            width = end - start
            grid.append(tuple(reversed(filling[k:k + width])))
            k += width
        fillings.append(tuple(grid))

    _search_lr_fillings(outer, inner, record, content_bound=nu.parts)
    fillings.sort(key=lambda grid: tuple(v for row in grid for v in row))
    return [LRTableau(shape=d, rows=grid) for grid in fillings]


# ---------------------- Products ----------------------

def lr_product(mu: Partition, nu: Partition) -> Decomposition:
    """[mu] x [nu] induced up: the character of the decaying diagram nu x mu."""
    return skew_character(compose_disjoint(SkewDiagram(outer=nu), SkewDiagram(outer=mu)))


def induction_product(first: Decomposition, second: Decomposition) -> Decomposition:
    """Bilinear extension of lr_product to characters."""
    total: Counter = Counter()
    for a in first.terms:
        for b in second.terms:
            for term in lr_product(a.nu, b.nu).terms:
                total[term.nu.parts] += a.coeff * b.coeff * term.coeff
    return Decomposition.from_counts(total)


def max_constituent(d: SkewDiagram) -> Partition:
    """
    The lexicographically largest constituent, always with coefficient 1: the content of
    the filling that numbers every column 1, 2, ..., its height. It is the conjugate of
    the sorted heights, so it determines the heights of d.
    """
    heights = tuple(sorted((h for h in column_lengths(normalize_basic(d)) if h > 0), reverse=True))
    return Partition(parts=conjugate_parts(heights))


def top_row_constituents(dec: Decomposition, width: int, i: int = 1) -> Decomposition:
    """
    Constituents nu whose first i parts all equal width, with those parts removed
    (xi_k = nu_(k+i)). For a basic diagram of that width this is the character of the
    diagram with the top i cells of each column removed.
    """
    shifted: Dict[Parts, int] = {}
    for term in dec.terms:
        parts = term.nu.parts
        if len(parts) >= i and all(p == width for p in parts[:i]):
            shifted[parts[i:]] = term.coeff
    return Decomposition.from_counts(shifted)


# ---------------------- Monomial oracle ----------------------

def _horizontal_strips(current: Parts, outer: Parts) -> List[Parts]:
    """Partitions kappa with current inside kappa inside outer and kappa/current a horizontal strip."""
    padded = current + (0,) * (len(outer) - len(current))
    ranges = []
    for i, row_end in enumerate(outer):
        ceiling = row_end if i == 0 else min(row_end, padded[i - 1])
        ranges.append(range(padded[i], ceiling + 1))
    return [tuple(p for p in choice if p > 0) for choice in product(*ranges)]


def skew_schur_monomials(d: SkewDiagram, nvars: int) -> Dict[Tuple[int, ...], int]:
    """
    Monomial expansion of the skew Schur polynomial in nvars variables: exponent
    vector -> number of semistandard fillings with entries <= nvars and that content.
    Built as chains of horizontal strips, one strip per variable.
    """
    if nvars < 1:
        raise ValueError(f"nvars must be positive, got {nvars}")
    outer, inner = normalize_parts(d.outer.parts, d.inner.parts)
    states: Dict[Parts, Counter] = {inner: Counter({(): 1})}
    for _ in range(nvars):
        following: Dict[Parts, Counter] = {}
        for current, exponents in states.items():
            size = sum(current)
            for strip in _horizontal_strips(current, outer):
                added = sum(strip) - size
                bucket = following.setdefault(strip, Counter())
                for prefix, count in exponents.items():
                    bucket[prefix + (added,)] += count
        states = following
    return dict(states.get(outer, Counter()))


def schur_monomials(p: Partition, nvars: int) -> Dict[Tuple[int, ...], int]:
    return skew_schur_monomials(SkewDiagram(outer=p), nvars)


# ---------------------- Dimension oracle ----------------------

def _hook_length_count(parts: Parts) -> int:
    transpose = conjugate_parts(parts)
    hooks = math.prod(
        row_end - j + transpose[j - 1] - i + 1
        for i, row_end in enumerate(parts, start=1)
        for j in range(1, row_end + 1)
    )
    return math.factorial(sum(parts)) // hooks


def _skew_chain_count(outer: Parts, inner: Parts) -> int:
    """Number of ways to grow inner into outer one cell at a time."""
    @lru_cache(maxsize=None)
    def grow(current: Parts) -> int:
        if current == outer:
            return 1
        padded = current + (0,) * (len(outer) - len(current))
        total = 0
        for i, row_end in enumerate(padded):
            if row_end < outer[i] and (i == 0 or padded[i - 1] > row_end):
                following = padded[:i] + (row_end + 1,) + padded[i + 1:]
                total += grow(tuple(p for p in following if p > 0))
        return total

    return grow(inner)


def syt_count(shape: Union[SkewDiagram, Partition]) -> int:
    """Standard fillings of a shape: hook length formula for straight shapes, chain counting for skew ones."""
    if isinstance(shape, Partition):
        return _hook_length_count(shape.parts)
    outer, inner = normalize_parts(shape.outer.parts, shape.inner.parts)
    if not inner:
        return _hook_length_count(outer)
    return _skew_chain_count(outer, inner)
