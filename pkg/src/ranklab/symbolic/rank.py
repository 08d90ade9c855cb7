"""Rank/degree, cardinality and restriction by structural recursion."""

from __future__ import annotations

from functools import lru_cache
from typing import Union as TypingUnion

from ..logic import BoolFn, Not, Sentence, truth_function
from ..ordinals import EMPTY_RD, INFINITE_RD, RankDegree, degree_sum_at_max
from .cardinals import ALEPH0, CONTINUUM, Cardinal
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
    cofactor,
    in_closure,
    union,
)


@lru_cache(maxsize=None)
def rank_degree(node: Family) -> RankDegree:
    if node is EMPTY:
        return EMPTY_RD
    if node is FULL:
        return INFINITE_RD
    if node is EMINIMAL:
        return RankDegree.of(1, 1)
    if isinstance(node, Fin):
        return RankDegree.of(0, len(node.points))
    if isinstance(node, OmegaSum):
        inner = rank_degree(node.child).rank
        if not inner.is_ordinal:
            return RankDegree(inner)
        return RankDegree(inner.succ(), 1)
    if isinstance(node, LimitSum):
        return RankDegree.of(node.limit, 1)
    if isinstance(node, Union):
        return degree_sum_at_max(rank_degree(c) for c in node.children)
    if isinstance(node, Guard):
        return rank_degree(node.child)
    if isinstance(node, Adjoin):
        extra = adjoin_extras(node)
        base = rank_degree(node.child)
        if not extra:
            return base
        return degree_sum_at_max([base, RankDegree.of(0, len(extra))])
    raise TypeError(f"unknown family node {node!r}")


def adjoin_extras(node: Adjoin) -> frozenset:
    """Adjoined points that are not limits of the child, hence isolated."""
    return frozenset(p for p in node.points if not in_closure(node.child, p))


@lru_cache(maxsize=None)
def cardinality(node: Family) -> Cardinal:
    if node is EMPTY:
        return Cardinal.finite(0)
    if node is FULL:
        return CONTINUUM
    if node is EMINIMAL or isinstance(node, LimitSum):
        return ALEPH0
    if isinstance(node, Fin):
        return Cardinal.finite(len(node.points))
    if isinstance(node, OmegaSum):
        return cardinality(node.child).times_aleph0()
    if isinstance(node, Union):
        total = Cardinal.finite(0)
        for c in node.children:
            total = total + cardinality(c)
        return total
    if isinstance(node, Guard):
        return cardinality(node.child)
    if isinstance(node, Adjoin):
        return cardinality(node.child) + len(node.points)
    raise TypeError(f"unknown family node {node!r}")


def _as_function(phi: TypingUnion[Sentence, BoolFn]) -> BoolFn:
    return phi if isinstance(phi, BoolFn) else truth_function(phi)


def restrict(node: Family, phi: TypingUnion[Sentence, BoolFn]) -> Family:
    """The subfamily of points satisfying ``phi``."""
    return _restrict(node, _as_function(phi))


@lru_cache(maxsize=None)
def _restrict(node: Family, fn: BoolFn) -> Family:
    if fn.is_true:
        return node
    if fn.is_false or node is EMPTY:
        return EMPTY
    left, right = cofactor(node, 1), cofactor(node, 0)
    r1 = _restrict(left, fn.cofactor_first(1))
    r0 = _restrict(right, fn.cofactor_first(0))
    if r1 is left and r0 is right:
        return node
    return union(r1, r0)


def rhd_pt(phi: Sentence, node: Family) -> bool:
    """Some point of the family satisfies ``phi``."""
    return restrict(node, phi) is not EMPTY


def rhd_tt(phi: Sentence, node: Family) -> bool:
    """Every point of the family satisfies ``phi``."""
    return restrict(node, Not(phi)) is EMPTY


def clear_caches() -> None:
    rank_degree.cache_clear()
    cardinality.cache_clear()
    _restrict.cache_clear()
