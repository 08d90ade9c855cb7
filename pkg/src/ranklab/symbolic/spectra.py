"""Rank-degree spectra, cardinality spectra and ranking sentences."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union as TypingUnion

from ..logic import FALSE, TRUE, Sentence, cube
from ..ordinals import (
    Ordinal,
    RankDegree,
    RankValue,
    compare,
    degree_sum_at_max,
    format_ordinal,
    omax,
    succ,
)
from .cardinals import ALEPH0, CONTINUUM, Cardinal
from .nodes import (
    FULL,
    Adjoin,
    Family,
    Guard,
    OmegaSum,
    Union,
    cofactor,
)
from .rank import adjoin_extras, cardinality, rank_degree
from .topology import isolated_points


@dataclass(frozen=True)
class SpectrumRd:
    """The set of ``(rank, degree)`` pairs of nonempty definable subfamilies.

    ``kind`` is ``segment`` (all pairs up to ``(beta, n)`` in the
    rank-then-degree order), ``infinity`` (only rank oo), or
    ``segment+infinity``.  ``n == 0`` stands for the open segment of all
    pairs with rank below ``beta``; it only occurs together with oo.
    ``empty`` is the spectrum of the empty family.
    """

    kind: str
    beta: Optional[Ordinal] = None
    n: Optional[int] = None

    def contains(self, rd: RankDegree) -> bool:
        if rd.rank.is_minus_one:
            return False
        if rd.rank.is_infinity:
            return self.kind in ("infinity", "segment+infinity")
        if self.kind not in ("segment", "segment+infinity"):
            return False
        c = compare(rd.rank.ordinal, self.beta)
        return c < 0 or (c == 0 and rd.degree <= self.n)

    def admits_rank(self, alpha: Ordinal) -> bool:
        """Some definable subfamily has rank ``alpha``."""
        if self.kind not in ("segment", "segment+infinity"):
            return False
        c = compare(Ordinal.of(alpha), self.beta)
        return c < 0 or (c == 0 and self.n >= 1)

    def __str__(self):
        if self.kind == "empty":
            return "{}"
        if self.kind == "infinity":
            return "{∞}"
        seg = f"O[({format_ordinal(self.beta)},{self.n})]"
        return seg if self.kind == "segment" else f"{seg} ∪ {{∞}}"

    def as_json(self):
        return {
            "shape": self.kind,
            "beta": None if self.beta is None else format_ordinal(self.beta),
            "n": self.n,
            "text": str(self),
        }


SPECTRUM_SHAPES = ("segment", "infinity", "segment+infinity")

# Best ranked part of a family: None (nothing ranked), ("max", RankDegree)
# for a largest ranked clopen part, or ("open", gamma) when the ranked parts
# reach every rank below gamma without a largest one.


def _combine(parts):
    maxes = [p[1] for p in parts if p is not None and p[0] == "max"]
    opens = [p[1] for p in parts if p is not None and p[0] == "open"]
    if not maxes and not opens:
        return None
    if opens:
        gamma = opens[0]
        for g in opens[1:]:
            gamma = omax(gamma, g)
        if not maxes or compare(max(m.rank for m in maxes).ordinal, gamma) < 0:
            return ("open", gamma)
    return ("max", degree_sum_at_max(maxes))


@lru_cache(maxsize=None)
def _ranked_part(node: Family):
    rd = rank_degree(node)
    if rd.rank.is_minus_one:
        return None
    if rd.rank.is_ordinal:
        return ("max", rd)
    if node is FULL:
        return None
    if isinstance(node, Union):
        return _combine([_ranked_part(c) for c in node.children])
    if isinstance(node, Guard):
        return _ranked_part(node.child)
    if isinstance(node, OmegaSum):
        inner = _ranked_part(node.child)
        if inner is None:
            return None
        if inner[0] == "max":
            return ("open", succ(inner[1].rank.ordinal))
        return inner
    if isinstance(node, Adjoin):
        extra = adjoin_extras(node)
        parts = [_ranked_part(node.child)]
        if extra:
            parts.append(("max", RankDegree.of(0, len(extra))))
        return _combine(parts)
    raise TypeError(f"unexpected rank oo node {node!r}")


def spectrum_rd(node: Family) -> SpectrumRd:
    rd = rank_degree(node)
    if rd.rank.is_minus_one:
        return SpectrumRd("empty")
    if rd.rank.is_ordinal:
        return SpectrumRd("segment", rd.rank.ordinal, rd.degree)
    part = _ranked_part(node)
    if part is None:
        return SpectrumRd("infinity")
    if part[0] == "max":
        return SpectrumRd("segment+infinity", part[1].rank.ordinal, part[1].degree)
    return SpectrumRd("segment+infinity", part[1], 0)


# ------------------------------------------------------------ pt spectra


@dataclass(frozen=True)
class PtSpectrum:
    """Sizes of definable subfamilies: ``1..finite_bound`` (all positive
    integers when ``finite_bound`` is None) plus ``infinite_part``."""

    finite_bound: Optional[int]
    infinite_part: frozenset

    def contains(self, size: Cardinal) -> bool:
        if isinstance(size, int):
            size = Cardinal.finite(size)
        if size.is_finite:
            return size.n >= 1 and (self.finite_bound is None or size.n <= self.finite_bound)
        return size in self.infinite_part

    def __str__(self):
        k = self.finite_bound
        if k is None:
            fin = "{1, 2, ...}"
        elif k <= 4:
            fin = "{" + ", ".join(str(i) for i in range(1, k + 1)) + "}"
        else:
            fin = f"{{1, ..., {k}}}"
        inf = "{" + ", ".join(str(c) for c in sorted(self.infinite_part)) + "}"
        if not self.infinite_part:
            return fin
        return inf if k == 0 else f"{fin} ∪ {inf}"

    def as_json(self):
        return {
            "finite": "all" if self.finite_bound is None else self.finite_bound,
            "infinite": [str(c) for c in sorted(self.infinite_part)],
            "text": str(self),
        }


@lru_cache(maxsize=None)
def has_countable_infinite_part(node: Family) -> bool:
    """Some clopen part of the family is countably infinite."""
    card = cardinality(node)
    if card == ALEPH0:
        return True
    if card != CONTINUUM:
        return False
    if node is FULL:
        return False
    if isinstance(node, Union):
        return any(has_countable_infinite_part(c) for c in node.children)
    if isinstance(node, Guard):
        return has_countable_infinite_part(node.child)
    if isinstance(node, (OmegaSum, Adjoin)):
        # a clopen set meeting infinitely many branches contains a whole
        # tail of them, perfect parts included
        return has_countable_infinite_part(node.child)
    return False


def pt_spectrum(node: Family) -> PtSpectrum:
    iso = cardinality(isolated_points(node))
    bound = iso.n if iso.is_finite else None
    infinite = set()
    if has_countable_infinite_part(node):
        infinite.add(ALEPH0)
    if cardinality(node) == CONTINUUM:
        infinite.add(CONTINUUM)
    return PtSpectrum(bound, frozenset(infinite))


# ------------------------------------------------------- ranking sentences


def ranking_sentence(
    node: Family, alpha: TypingUnion[int, Ordinal, RankValue], max_depth: int = 4096
) -> Optional[Sentence]:
    """A cube whose restriction of ``node`` has rank exactly ``alpha``."""
    alpha = RankValue.of(alpha)
    if alpha.is_minus_one:
        return FALSE
    rd = rank_degree(node)
    if alpha.is_infinity:
        return TRUE if rd.rank.is_infinity else None
    if not spectrum_rd(node).admits_rank(alpha.ordinal):
        return None
    bits = []
    current = node
    for _ in range(max_depth):
        if rank_degree(current).rank == alpha:
            return cube({i: b for i, b in enumerate(bits)}) if bits else TRUE
        options = []
        for b in (1, 0):
            child = cofactor(current, b)
            spec = spectrum_rd(child)
            if not spec.admits_rank(alpha.ordinal):
                continue
            r = rank_degree(child).rank
            # prefer ranked parts, then lower ranks, then the 1-branch
            options.append((0 if r.is_ordinal else 1, r, -b, b, child))
        if not options:
            return None
        options.sort(key=lambda o: (o[0], o[1], o[2]))
        _, _, _, b, current = options[0]
        bits.append(b)
    return None
