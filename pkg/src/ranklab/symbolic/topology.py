"""Closure, Cantor-Bendixson ranks, isolated points and separation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional

from ..errors import NotEClosedError, NotInClosureError, SearchBudgetExceeded
from ..logic import FALSE, TRUE, Atom, Not, Sentence, conj, cube, disj
from ..ordinals import INFINITY, RankValue, ranked
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
    adjoin,
    cofactor,
    contains,
    guard,
    guard_strip,
    in_closure,
    limit_branch,
    limitsum,
    lift,
    omega_branch,
    omegasum,
    union,
    union_branch,
)
from .points import ONE_POINT, ZERO_POINT, PointTheory
from .rank import adjoin_extras, cardinality, rank_degree


@lru_cache(maxsize=None)
def closure(node: Family) -> Family:
    """Topological closure (the family plus all its accumulation points)."""
    if node is EMPTY or node is FULL or isinstance(node, Fin):
        return node
    if node is EMINIMAL:
        return adjoin(EMINIMAL, [ZERO_POINT])
    if isinstance(node, OmegaSum):
        return adjoin(omegasum(closure(node.child), node.stride, node.phase), [ZERO_POINT])
    if isinstance(node, LimitSum):
        return adjoin(limitsum(node.limit, node.start, True), [ZERO_POINT])
    if isinstance(node, Union):
        return union(*(closure(c) for c in node.children))
    if isinstance(node, Guard):
        return guard(node.pins, closure(node.child))
    if isinstance(node, Adjoin):
        return adjoin(closure(node.child), node.points)
    raise TypeError(f"unknown family node {node!r}")


@lru_cache(maxsize=None)
def missing_limits(node: Family) -> Optional[frozenset]:
    """Accumulation points of ``node`` that it does not contain.

    Returns None when there are infinitely many of them.
    """
    if node is EMPTY or node is FULL or isinstance(node, Fin):
        return frozenset()
    if node is EMINIMAL:
        return frozenset([ZERO_POINT])
    if isinstance(node, OmegaSum):
        inner = missing_limits(node.child)
        return frozenset([ZERO_POINT]) if inner == frozenset() else None
    if isinstance(node, LimitSum):
        return frozenset([ZERO_POINT]) if node.closed else None
    if isinstance(node, (Union, Guard)):
        out = set()
        children = node.children if isinstance(node, Union) else (node.child,)
        for j, c in enumerate(children):
            inner = missing_limits(c)
            if inner is None:
                return None
            out.update(lift(node, j, p) for p in inner)
        return frozenset(out)
    if isinstance(node, Adjoin):
        inner = missing_limits(node.child)
        return None if inner is None else inner - node.points
    raise TypeError(f"unknown family node {node!r}")


def is_e_closed(node: Family) -> bool:
    return missing_limits(node) == frozenset()


# ------------------------------------------------------------ CB ranks


def cb_rank(node: Family, p: PointTheory) -> RankValue:
    """Cantor-Bendixson rank of ``p`` inside the closure of ``node``."""
    if not in_closure(node, p):
        raise NotInClosureError(f"{p} is not in the closure of {node}")
    return _cb(node, p)


def _cb(node: Family, p: PointTheory) -> RankValue:
    while True:
        if node is FULL:
            return INFINITY
        if node is EMINIMAL:
            return ranked(1 if p == ZERO_POINT else 0)
        if isinstance(node, Fin):
            return ranked(0)
        if isinstance(node, OmegaSum):
            i, tail = omega_branch(node, p)
            if i is None:
                return rank_degree(node).rank
            node, p = node.child, tail
        elif isinstance(node, LimitSum):
            pos = p.first_one()
            if pos is None:
                return ranked(node.limit)
            node, p = limit_branch(node, pos), p.shift(pos + 1)
        elif isinstance(node, Union):
            j, tail = union_branch(len(node.children), p)
            node, p = node.children[j], tail
        elif isinstance(node, Guard):
            node, p = node.child, guard_strip(node, p)
        elif isinstance(node, Adjoin):
            if not in_closure(node.child, p):
                return ranked(0)
            node = node.child
        else:
            raise TypeError(f"unknown family node {node!r}")


# ----------------------------------------------------- isolated points


@lru_cache(maxsize=None)
def isolated_points(node: Family) -> Family:
    """The subfamily of points isolated in ``node``."""
    if node is FULL:
        return EMPTY
    if node is EMPTY or node is EMINIMAL or isinstance(node, Fin):
        return node
    if isinstance(node, OmegaSum):
        return omegasum(isolated_points(node.child), node.stride, node.phase)
    if isinstance(node, LimitSum):
        return limitsum(node.limit, node.start, False)
    if isinstance(node, Union):
        return union(*(isolated_points(c) for c in node.children))
    if isinstance(node, Guard):
        return guard(node.pins, isolated_points(node.child))
    if isinstance(node, Adjoin):
        return adjoin(isolated_points(node.child), adjoin_extras(node))
    raise TypeError(f"unknown family node {node!r}")


@dataclass(frozen=True)
class GeneratingSet:
    """A least generating set: its finitely listed points plus the
    finitely described family they belong to."""

    family: Family
    listed: tuple  # up to ``sample`` points, in enumeration order
    cardinality: Cardinal

    def __str__(self):
        return str(self.family)


def least_generating_set(node: Family, sample: int = 8) -> Optional[GeneratingSet]:
    """Isolated points of an e-closed family when they regenerate it.

    A countable closed set is scattered, so its isolated points are dense
    and form the least generating set.  A family with a continuum of points
    contains a perfect cylinder with no isolated points, so no generating
    set is least.
    """
    if not is_e_closed(node):
        raise NotEClosedError(f"{node} is not e-closed")
    if cardinality(node) == CONTINUUM:
        return None
    iso = isolated_points(node)
    return GeneratingSet(iso, tuple(itertools.islice(enumerate_points(iso), sample)), cardinality(iso))


def isolating_sentence(node: Family, p: PointTheory, max_depth: int = 4096) -> Optional[Sentence]:
    """A cube true in ``p`` and in no other point of ``node``, or None when
    ``p`` is not an isolated point of ``node``."""
    if not contains(node, p) or _cb(node, p) != ranked(0):
        return None
    current = node
    for depth in range(max_depth + 1):
        if cardinality(current) == 1:
            return cube({i: p.value(i) for i in range(depth)}) if depth else TRUE
        current = cofactor(current, p.value(depth))
    raise SearchBudgetExceeded(f"no isolating cube found within {max_depth} atoms")


# ----------------------------------------------------- point enumeration


def _dovetail(sources) -> Iterator:
    """Interleave a possibly infinite stream of possibly infinite iterators."""
    active: List[Iterator] = []
    sources = iter(sources)
    exhausted = False
    while True:
        if not exhausted:
            try:
                active.append(iter(next(sources)))
            except StopIteration:
                exhausted = True
        if exhausted and not active:
            return
        still = []
        for it in active:
            try:
                yield next(it)
            except StopIteration:
                continue
            still.append(it)
        active = still


def enumerate_points(node: Family) -> Iterator[PointTheory]:
    """Every point of a countable family, each exactly once."""
    if node is FULL:
        raise ValueError("the full family is uncountable")
    return _points(node)


def _points(node: Family) -> Iterator[PointTheory]:
    if node is EMPTY or node is FULL:
        return iter(())
    if node is EMINIMAL:
        return (PointTheory.one_hot(i) for i in itertools.count())
    if isinstance(node, Fin):
        return iter(sorted(node.points, key=lambda q: (q.span, q.bits(), q.default)))
    if isinstance(node, OmegaSum):
        return _dovetail(
            ((lambda i: (lift(node, i, q) for q in _points(node.child)))(i))
            for i in itertools.count()
        )
    if isinstance(node, LimitSum):
        return _dovetail(
            ((lambda i: (lift(node, i, q) for q in _points(limit_branch(node, i))))(i))
            for i in itertools.count()
        )
    if isinstance(node, Union):
        return _dovetail(
            ((lambda j, c: (lift(node, j, q) for q in _points(c)))(j, c))
            for j, c in enumerate(node.children)
        )
    if isinstance(node, Guard):
        return (lift(node, 0, q) for q in _points(node.child))
    if isinstance(node, Adjoin):
        return itertools.chain(sorted(node.points, key=lambda q: (q.span, q.bits(), q.default)), _points(node.child))
    raise TypeError(f"unknown family node {node!r}")


# --------------------------------------------------- accumulation points


@lru_cache(maxsize=None)
def _derived_size(node: Family) -> Cardinal:
    if node is EMPTY or isinstance(node, Fin):
        return Cardinal.finite(0)
    if node is FULL:
        return CONTINUUM
    if node is EMINIMAL:
        return Cardinal.finite(1)
    if isinstance(node, OmegaSum):
        return _derived_size(node.child).times_aleph0() + 1
    if isinstance(node, LimitSum):
        return ALEPH0
    if isinstance(node, Union):
        total = Cardinal.finite(0)
        for c in node.children:
            total = total + _derived_size(c)
        return total
    if isinstance(node, (Guard, Adjoin)):
        return _derived_size(node.child)
    raise TypeError(f"unknown family node {node!r}")


@lru_cache(maxsize=None)
def _listed_size(node: Family) -> Cardinal:
    """How many points :func:`_limits` yields."""
    if node is EMPTY or node is FULL or isinstance(node, Fin):
        return Cardinal.finite(0)
    if node is EMINIMAL:
        return Cardinal.finite(1)
    if isinstance(node, OmegaSum):
        return _listed_size(node.child).times_aleph0() + 1
    if isinstance(node, LimitSum):
        return ALEPH0
    if isinstance(node, Union):
        total = Cardinal.finite(0)
        for c in node.children:
            total = total + _listed_size(c)
        return total
    return _listed_size(node.child)


def _limits(node: Family) -> Iterator[PointTheory]:
    """Accumulation points outside perfect kernels."""
    if node is EMPTY or node is FULL or isinstance(node, Fin):
        return iter(())
    if node is EMINIMAL:
        return iter([ZERO_POINT])
    if isinstance(node, OmegaSum):
        if _listed_size(node.child) == 0:
            return iter([ZERO_POINT])
        branches = (
            ((lambda i: (lift(node, i, q) for q in _limits(node.child)))(i))
            for i in itertools.count()
        )
        return itertools.chain([ZERO_POINT], _dovetail(branches))
    if isinstance(node, LimitSum):
        branches = (
            ((lambda i: (lift(node, i, q) for q in _limits(limit_branch(node, i))))(i))
            for i in itertools.count()
        )
        return itertools.chain([ZERO_POINT], _dovetail(branches))
    if isinstance(node, Union):
        return _dovetail(
            ((lambda j, c: (lift(node, j, q) for q in _limits(c)))(j, c))
            for j, c in enumerate(node.children)
        )
    if isinstance(node, Guard):
        return (lift(node, 0, q) for q in _limits(node.child))
    if isinstance(node, Adjoin):
        return _limits(node.child)
    raise TypeError(f"unknown family node {node!r}")


def _has_kernel(node: Family) -> bool:
    return cardinality(node) == CONTINUUM


@dataclass(frozen=True)
class AccumulationReport:
    count: Cardinal
    points: tuple  # every accumulation point when finitely many, else a prefix
    complete: bool  # whether ``points`` lists all of them
    kernel: bool  # a perfect (continuum) kernel is present

    def describe(self) -> str:
        shown = ", ".join(str(p) for p in self.points) or "none"
        parts = [f"{self.count} accumulation point(s)"]
        parts.append(f"[{shown}{'' if self.complete else ', ...'}]")
        if self.kernel:
            parts.append("plus a continuum kernel")
        return " ".join(parts)


def accumulation_points(node: Family, sample: int = 8) -> AccumulationReport:
    count = _derived_size(node)
    listed = _listed_size(node)
    if listed.is_finite:
        pts = tuple(_limits(node))
    else:
        pts = tuple(itertools.islice(_limits(node), sample))
    return AccumulationReport(count, pts, count.is_finite, _has_kernel(node))


# -------------------------------------------------------------- separation


def separating_sentence(first: Family, second: Family, max_depth: int = 256) -> Optional[Sentence]:
    """A sentence true on ``first`` and false on ``second``, or None when the
    closures meet (then no sentence separates them)."""
    memo: dict = {}
    try:
        return _separate(first, second, 0, (), memo, max_depth)
    except _Inseparable:
        return None


class _Inseparable(Exception):
    pass


def _separate(a: Family, b: Family, depth: int, path: tuple, memo: dict, max_depth: int) -> Sentence:
    if a is EMPTY:
        return FALSE
    if b is EMPTY:
        return TRUE
    if (a, b) in path:
        # a cycle through pairs of nonempty cells: the branch it traces is
        # a common accumulation point
        raise _Inseparable
    if any(in_closure(a, p) and in_closure(b, p) for p in (ZERO_POINT, ONE_POINT)):
        # a shared constant accumulation point; catches descents that
        # never revisit a pair, as along the 0-branch of a limit sum
        raise _Inseparable
    key = (a, b, depth)
    if key in memo:
        return memo[key]
    if depth >= max_depth:
        raise SearchBudgetExceeded(f"separation search exceeded depth {max_depth}")
    path = path + ((a, b),)
    hi = _separate(cofactor(a, 1), cofactor(b, 1), depth + 1, path, memo, max_depth)
    lo = _separate(cofactor(a, 0), cofactor(b, 0), depth + 1, path, memo, max_depth)
    q = Atom(depth)
    if hi == lo:
        out = hi
    elif hi == TRUE and lo == FALSE:
        out = q
    elif hi == FALSE and lo == TRUE:
        out = Not(q)
    else:
        parts = []
        if hi != FALSE:
            parts.append(q if hi == TRUE else conj(q, hi))
        if lo != FALSE:
            parts.append(Not(q) if lo == TRUE else conj(Not(q), lo))
        out = disj(*parts)
    memo[key] = out
    return out


def clear_caches() -> None:
    closure.cache_clear()
    missing_limits.cache_clear()
    isolated_points.cache_clear()
    _derived_size.cache_clear()
    _listed_size.cache_clear()
