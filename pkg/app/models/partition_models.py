# app/models/partition_models.py
from functools import total_ordering
from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_serializer, model_validator

from app.services.errors import MalformedPartition, MalformedSkew, NotContained


# ---------------------- Partitions ----------------------

@total_ordering
class Partition(BaseModel):
    """
    A weakly decreasing sequence of positive integers.
    Two partitions differing only by trailing zeros are the same partition,
    so trailing zeros are stripped on construction.
    Serialized as a plain list of integers, e.g. [4, 3, 2, 1].
    """
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = Field(default=(), description="Positive parts, largest first.")

    @model_validator(mode="before")
    @classmethod
    def _coerce_sequence(cls, data: Any) -> Any:
        # Accept the serialized form (a bare list) as well as {"parts": [...]}
        if isinstance(data, (list, tuple)):
            return {"parts": tuple(data)}
        return data

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        parts = tuple(parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"parts must be non-negative, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return parts

    @model_serializer(mode="plain")
    def _serialize(self) -> List[int]:
        return list(self.parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Reads comma-separated non-negative integers ("4,3,3,0,0").
        The empty string is the empty partition. Surrounding parentheses are tolerated.
        """
        stripped = text.strip().strip("()").strip()
        if not stripped:
            return cls()
        values = []
        for token in stripped.split(","):
            token = token.strip()
            try:
                value = int(token)
            except ValueError as e:
                raise MalformedPartition(f"non-integer token {token!r} in {text!r}") from e
            if value < 0:
                raise MalformedPartition(f"negative part {value} in {text!r}")
            values.append(value)
        for a, b in zip(values, values[1:]):
            if a < b:
                raise MalformedPartition(f"parts of {text!r} are not weakly decreasing ({a} < {b})")
        return cls(parts=tuple(values))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def part(self, i: int) -> int:
        """1-based part access; missing parts are 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """True iff other fits inside self, componentwise."""
        if other.length > self.length:
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts < other.parts

    def __str__(self) -> str:
        return f"({self.text})"


# ---------------------- Skew diagrams ----------------------

class SkewDiagram(BaseModel):
    """
    The skew diagram outer/inner: the boxes of outer that are not boxes of inner.
    Cells use 1-based matrix coordinates (row, column).
    Serialized as {"outer": [4, 3, 2, 1], "inner": [2]}; text "outer/inner" is accepted on input.
    """
    model_config = ConfigDict(frozen=True)

    outer: Partition
    inner: Partition = Field(default_factory=Partition)

    @model_validator(mode="before")
    @classmethod
    def _coerce_text(cls, data: Any) -> Any:
        if isinstance(data, str):
            diagram = cls.parse(data)
            return {"outer": diagram.outer, "inner": diagram.inner}
        return data

    @model_validator(mode="after")
    def _check_containment(self) -> "SkewDiagram":
        if not self.outer.contains(self.inner):
            raise NotContained(f"{self.inner} is not contained in {self.outer}")
        return self

    @classmethod
    def parse(cls, text: str) -> "SkewDiagram":
        """Reads "outer/inner"; "outer" and "outer/" both mean an empty inner partition."""
        if text.count("/") > 1:
            raise MalformedSkew(f"expected 'outer/inner', got {text!r}")
        outer_text, _, inner_text = text.partition("/")
        outer = Partition.parse(outer_text)
        inner = Partition.parse(inner_text)
        if not outer.contains(inner):
            raise NotContained(f"{inner} is not contained in {outer}")
        return cls(outer=outer, inner=inner)

    @property
    def cell_count(self) -> int:
        return self.outer.weight - self.inner.weight

    @property
    def text(self) -> str:
        return f"{self.outer.text}/{self.inner.text}"

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


class PathStats(BaseModel):
    """Segment lengths of the inner and outer boundary lattice paths of a basic skew diagram."""
    model_config = ConfigDict(frozen=True)

    s_in: Optional[int] = Field(None, description="Shortest inner segment; None when the inner partition is empty.")
    s_out: int = Field(..., description="Shortest outer segment.")
    inner_segments: Tuple[int, ...] = Field((), description="Inner path segments, lower left to upper right.")
    outer_segments: Tuple[int, ...] = Field((), description="Outer path segments, lower left to upper right.")


class BoxSpec(BaseModel):
    """The rectangle (k^l): k columns and l rows."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., gt=0, description="Column bound (largest allowed part).")
    l: int = Field(..., gt=0, description="Row bound (largest allowed length).")

    def fits(self, p: Partition) -> bool:
        return p.length <= self.l and p.part(1) <= self.k

    def __str__(self) -> str:
        return f"{self.k}x{self.l}"
