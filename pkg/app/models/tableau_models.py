# app/models/tableau_models.py
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.models.partition_models import Partition, SkewDiagram


def is_lattice_word(word: Sequence[int]) -> bool:
    """
    True iff every prefix of word holds at least as many i's as (i+1)'s, for all i >= 1.
    """
    counts: Dict[int, int] = {}
    for letter in word:
        if letter < 1:
            return False
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


# ---------------------- LR tableaux ----------------------

class LRTableau(BaseModel):
    """
    A filling of a skew diagram whose rows weakly increase, whose columns strictly
    increase and whose reverse row word is a lattice word.
    `rows[i-1]` lists the entries of row i from left to right.
    """
    model_config = ConfigDict(frozen=True)

    shape: SkewDiagram
    rows: Tuple[Tuple[int, ...], ...] = Field(..., description="Entries of each row of the shape, left to right.")

    @model_validator(mode="after")
    def _check_filling(self) -> "LRTableau":
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != outer.length:
            raise ValueError(f"expected {outer.length} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != outer.part(i) - inner.part(i):
                raise ValueError(f"row {i} has {len(row)} entries, shape needs {outer.part(i) - inner.part(i)}")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} is not weakly increasing: {row}")
        for i in range(2, outer.length + 1):
            for j in range(inner.part(i) + 1, outer.part(i) + 1):
                if inner.part(i - 1) < j <= outer.part(i - 1) and self.entry(i - 1, j) >= self.entry(i, j):
                    raise ValueError(f"column {j} is not strictly increasing at row {i}")
        if not is_lattice_word(self.reverse_row_word()):
            raise ValueError("reverse row word is not a lattice word")
        return self

    def entry(self, i: int, j: int) -> int:
        """Entry T(i, j) in 1-based matrix coordinates."""
        offset = j - self.shape.inner.part(i) - 1
        row = self.rows[i - 1]
        if not 0 <= offset < len(row):
            raise KeyError((i, j))
        return row[offset]

    def reverse_row_word(self) -> Tuple[int, ...]:
        return tuple(letter for row in self.rows for letter in reversed(row))

    def content(self) -> Partition:
        counts: Dict[int, int] = {}
        for letter in self.reverse_row_word():
            counts[letter] = counts.get(letter, 0) + 1
        return Partition(parts=tuple(counts[v] for v in sorted(counts)))

    def row_major(self) -> Tuple[int, ...]:
        return tuple(letter for row in self.rows for letter in row)


# ---------------------- Decompositions ----------------------

class Term(BaseModel):
    model_config = ConfigDict(frozen=True)

    nu: Partition
    coeff: int = Field(..., ge=1, description="Multiplicity of [nu]; absent terms have coefficient 0.")


PartitionKey = Union[Partition, Tuple[int, ...]]


class Decomposition(BaseModel):
    """
    A character written in the basis of irreducibles [nu]: a finite map nu -> coefficient.
    Terms are kept in descending lexicographic order of nu.
    """
    model_config = ConfigDict(frozen=True)

    terms: Tuple[Term, ...] = ()

    @field_validator("terms")
    @classmethod
    def _sort_terms(cls, terms: Tuple[Term, ...]) -> Tuple[Term, ...]:
        ordered = tuple(sorted(terms, key=lambda t: t.nu.parts, reverse=True))
        for a, b in zip(ordered, ordered[1:]):
            if a.nu == b.nu:
                raise ValueError(f"duplicate term {a.nu}")
        if len({t.nu.weight for t in ordered}) > 1:
            raise ValueError("all terms of a decomposition must have the same size")
        return ordered

    @classmethod
    def from_counts(cls, counts: Mapping[PartitionKey, int]) -> "Decomposition":
        terms = []
        for key, coeff in counts.items():
            if coeff == 0:
                continue
            nu = key if isinstance(key, Partition) else Partition(parts=tuple(key))
            terms.append(Term(nu=nu, coeff=coeff))
        return cls(terms=tuple(terms))

    @classmethod
    def trivial(cls) -> "Decomposition":
        """The character {(): 1} of the empty diagram."""
        return cls(terms=(Term(nu=Partition(), coeff=1),))

    def coefficient(self, nu: PartitionKey) -> int:
        parts = nu.parts if isinstance(nu, Partition) else tuple(nu)
        for term in self.terms:
            if term.nu.parts == parts:
                return term.coeff
        return 0

    def as_dict(self) -> Dict[Tuple[int, ...], int]:
        return {t.nu.parts: t.coeff for t in self.terms}

    def digest(self) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        """Exact, hashable key used to group equal characters."""
        return tuple((t.nu.parts, t.coeff) for t in self.terms)

    @property
    def size(self) -> Optional[int]:
        return self.terms[0].nu.weight if self.terms else None

    @property
    def is_multiplicity_free(self) -> bool:
        return all(t.coeff == 1 for t in self.terms)

    def lines(self) -> List[str]:
        return [f"{t.nu}: {t.coeff}" for t in self.terms]

    def __str__(self) -> str:
        return " / ".join(self.lines())
