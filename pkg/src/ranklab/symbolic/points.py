"""Complete theories over countably many atoms, stored as a default bit
plus the finite set of atoms whose value differs from it."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class PointTheory(Mapping):
    default: int
    flipped: frozenset = frozenset()

    def __post_init__(self):
        if self.default not in (0, 1):
            raise ValueError("default must be 0 or 1")
        if any(not isinstance(i, int) or i < 0 for i in self.flipped):
            raise ValueError("exceptions must be atom indices")

    @staticmethod
    def from_values(values: Mapping, default: int = 0) -> "PointTheory":
        """Point with ``Qi = values[i]`` on the listed atoms, ``default`` elsewhere."""
        return PointTheory(default, frozenset(i for i, v in values.items() if int(v) != default))

    @staticmethod
    def from_bits(bits: str, default: int = 0) -> "PointTheory":
        return PointTheory(default, frozenset(i for i, ch in enumerate(bits) if int(ch) != default))

    @staticmethod
    def one_hot(i: int) -> "PointTheory":
        return PointTheory(0, frozenset((i,)))

    # Mapping protocol over the infinitely many atoms; iteration only covers
    # the atoms that must be listed to pin the point down.
    def __getitem__(self, i: int) -> int:
        return self.value(i)

    def __iter__(self):
        return iter(range(self.span))

    def __len__(self):
        return self.span

    def __hash__(self):
        return hash((self.default, self.flipped))

    def __eq__(self, other):
        if not isinstance(other, PointTheory):
            return NotImplemented
        return self.default == other.default and self.flipped == other.flipped

    @property
    def span(self) -> int:
        """One past the last exceptional atom."""
        return max(self.flipped) + 1 if self.flipped else 0

    def value(self, i: int) -> int:
        return self.default ^ (i in self.flipped)

    def shift(self, k: int) -> "PointTheory":
        """Drop the first ``k`` atoms and renumber the rest down."""
        if k == 0:
            return self
        return PointTheory(self.default, frozenset(i - k for i in self.flipped if i >= k))

    def prepend(self, bits: Iterable[int]) -> "PointTheory":
        bits = list(bits)
        k = len(bits)
        moved = {i + k for i in self.flipped}
        moved.update(j for j, b in enumerate(bits) if b != self.default)
        return PointTheory(self.default, frozenset(moved))

    def first_one(self) -> Optional[int]:
        """Index of the first true atom, or None for the all-false point."""
        if self.default == 0:
            return min(self.flipped) if self.flipped else None
        i = 0
        while i in self.flipped:
            i += 1
        return i

    def remove(self, positions: Iterable[int]) -> "PointTheory":
        """Delete the given atom positions, closing the gaps."""
        gone = sorted(set(positions))
        out = set()
        for i in self.flipped:
            if i in gone:
                continue
            out.add(i - sum(1 for g in gone if g < i))
        return PointTheory(self.default, frozenset(out))

    def insert(self, pins: Mapping) -> "PointTheory":
        """Inverse of :meth:`remove`: the pinned values go at their positions
        and the remaining atoms are filled, in order, from this point."""
        pinned = sorted(pins)
        out = {p for p in pinned if pins[p] != self.default}
        for i in self.flipped:
            # the i-th free position
            pos = i
            for p in pinned:
                if p <= pos:
                    pos += 1
                else:
                    break
            out.add(pos)
        return PointTheory(self.default, frozenset(out))

    def bits(self, n: Optional[int] = None) -> str:
        n = self.span if n is None else n
        return "".join(str(self.value(i)) for i in range(n))

    def __str__(self):
        return format_point(self)

    def __repr__(self):
        return f"PointTheory({format_point(self)})"


ZERO_POINT = PointTheory(0)
ONE_POINT = PointTheory(1)


def format_point(p: PointTheory, width: Optional[int] = None) -> str:
    """``0110`` for a point that is false from some atom on, ``01(1)`` when
    the tail is all true; the all-false point prints as ``0``."""
    n = max(p.span, 1) if width is None else width
    text = p.bits(n)
    return text + "(1)" if p.default == 1 else text


def parse_point(text: str) -> PointTheory:
    text = text.strip()
    default = 0
    if text.endswith("(1)"):
        default, text = 1, text[:-3]
    elif text.endswith("(0)"):
        text = text[:-3]
    if set(text) - {"0", "1"}:
        raise ValueError(f"bad point literal {text!r}")
    return PointTheory.from_bits(text, default)
