"""Cardinalities truncated to finite, aleph_0 and the continuum."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class Cardinal:
    kind: str  # "finite" | "aleph0" | "continuum"
    n: int = 0

    @staticmethod
    def finite(n: int) -> "Cardinal":
        if n < 0:
            raise ValueError("negative cardinal")
        return Cardinal("finite", n)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def _key(self):
        return (0, self.n) if self.kind == "finite" else ((1, 0) if self.kind == "aleph0" else (2, 0))

    def __lt__(self, other):
        if isinstance(other, int):
            other = Cardinal.finite(other)
        return self._key() < other._key()

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.kind == "finite" and self.n == other
        if not isinstance(other, Cardinal):
            return NotImplemented
        return self.kind == other.kind and self.n == other.n

    def __hash__(self):
        return hash(self.n) if self.kind == "finite" else hash(self.kind)

    def __add__(self, other: "Cardinal") -> "Cardinal":
        if isinstance(other, int):
            other = Cardinal.finite(other)
        if self.is_finite and other.is_finite:
            return Cardinal.finite(self.n + other.n)
        return max(self, other)

    def times_aleph0(self) -> "Cardinal":
        """``aleph_0`` copies of a set of this size."""
        if self == 0:
            return self
        return CONTINUUM if self.kind == "continuum" else ALEPH0

    def __str__(self):
        return str(self.n) if self.is_finite else self.kind


ALEPH0 = Cardinal("aleph0")
CONTINUUM = Cardinal("continuum")
ZERO_CARD = Cardinal.finite(0)
