"""Generic sentences and theories of symbolic families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Union as TypingUnion

from ..logic import Sentence
from ..ordinals import RankDegree
from .cardinals import CONTINUUM, Cardinal
from .nodes import (
    EMINIMAL,
    EMPTY,
    FULL,
    Adjoin,
    Family,
    Fin,
    Guard,
    LimitSum,
    OmegaSum,
    Union,
    contains,
    in_closure,
    lift,
)
from .points import ZERO_POINT, PointTheory
from .rank import adjoin_extras, cardinality, rank_degree, restrict
from .topology import _cb, closure


@dataclass(frozen=True)
class ContinuumKernel:
    """Stands for the perfect kernel of the closure: continuum many generic theories."""

    def __str__(self):
        return "continuum kernel"


CONTINUUM_KERNEL = ContinuumKernel()


def _same_top(a: RankDegree, b: RankDegree) -> bool:
    if b.rank.is_infinity:
        return a.rank.is_infinity
    return a == b


def is_generic_sentence(phi: Sentence, node: Family) -> bool:
    """The restriction keeps the rank and degree of the family (rank only for oo)."""
    return _same_top(rank_degree(restrict(node, phi)), rank_degree(node))


def is_p_complete(phi: Sentence, node: Family) -> bool:
    return cardinality(restrict(node, phi)) == 1


def top_points(node: Family) -> List[PointTheory]:
    """Points of maximal CB rank in the closure of a ranked family."""
    rd = rank_degree(node)
    if not rd.rank.is_ordinal:
        raise ValueError("top points are defined for families of ordinal rank")
    if isinstance(node, Fin):
        return sorted(node.points, key=lambda p: (p.span, p.bits(), p.default))
    if node is EMINIMAL or isinstance(node, (OmegaSum, LimitSum)):
        return [ZERO_POINT]
    if isinstance(node, Union):
        out = []
        for j, c in enumerate(node.children):
            if rank_degree(c).rank == rd.rank:
                out.extend(lift(node, j, p) for p in top_points(c))
        return out
    if isinstance(node, Guard):
        return [lift(node, 0, p) for p in top_points(node.child)]
    if isinstance(node, Adjoin):
        base = top_points(node.child) if rank_degree(node.child).rank == rd.rank else []
        if rd.rank == 0:
            base = base + sorted(adjoin_extras(node), key=lambda p: (p.span, p.bits(), p.default))
        return base
    raise TypeError(f"unexpected node {node!r}")


def generic_theories(node: Family) -> TypingUnion[List[PointTheory], ContinuumKernel]:
    rd = rank_degree(node)
    if rd.rank.is_minus_one:
        return []
    if rd.rank.is_infinity:
        return CONTINUUM_KERNEL
    return top_points(node)


def count_generic(node: Family) -> Cardinal:
    rd = rank_degree(node)
    if rd.rank.is_minus_one:
        return Cardinal.finite(0)
    if rd.rank.is_infinity:
        return CONTINUUM
    return Cardinal.finite(rd.degree)


def count_nongeneric(node: Family) -> Cardinal:
    """Members of the family that are not generic theories of it."""
    rd = rank_degree(node)
    if rd.rank.is_minus_one:
        return Cardinal.finite(0)
    if rd.rank.is_ordinal:
        tops = sum(1 for p in top_points(node) if contains(node, p))
        total = cardinality(node)
        return Cardinal.finite(total.n - tops) if total.is_finite else total
    return _outside_kernel(node)


def _outside_kernel(node: Family) -> Cardinal:
    """Members of finite CB rank in the closure."""
    rd = rank_degree(node)
    if node is EMPTY or node is FULL:
        return Cardinal.finite(0)
    if rd.rank.is_ordinal:
        return cardinality(node)
    if isinstance(node, Union):
        total = Cardinal.finite(0)
        for c in node.children:
            total = total + _outside_kernel(c)
        return total
    if isinstance(node, Guard):
        return _outside_kernel(node.child)
    if isinstance(node, OmegaSum):
        return _outside_kernel(node.child).times_aleph0()
    if isinstance(node, Adjoin):
        extra = sum(
            1
            for p in node.points
            if not in_closure(node.child, p) or not _cb(node.child, p).is_infinity
        )
        return _outside_kernel(node.child) + extra
    raise TypeError(f"unexpected node {node!r}")


def generic_cb_ranks_match(node: Family) -> bool:
    """Every reported generic theory has CB rank equal to the family's rank."""
    gens = generic_theories(node)
    if isinstance(gens, ContinuumKernel):
        return True
    target = rank_degree(node).rank
    closed = closure(node)
    return all(_cb(closed, p) == target for p in gens)
