"""Tree-grammar families of points of Cantor space.

Every node is hash-consed: constructing the same term twice yields the same
object, so equality is structural and hashing is O(1).  The public
constructors (:func:`fin`, :func:`omegasum`, ...) normalize degenerate
shapes, e.g. a union with a single child is that child.

Guards are positional.  A child placed under a guard prefix of length ``k``
speaks about the global atoms from ``k`` on, renumbered from 0.  A
``Guard`` node pins some atoms and lets its child range over the remaining
atoms in order, so it is an embedding and preserves rank and cardinality.

The derivative ``cofactor(F, b)`` is ``{p.shift(1) : p in F, p(Q0) = b}``;
every operation downstream is a recursion over it or over the structure.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from ..errors import OrdinalBoundError
from ..ordinals import ONE, Ordinal, compare, parse_ordinal
from .points import ZERO_POINT, PointTheory

_TABLE: dict = {}
_TABLE_LOCK = threading.Lock()


class Family:
    """Base class of grammar nodes.  Instances are immutable and interned."""

    __slots__ = ("_key", "_hash")
    kind = "family"

    def __setattr__(self, name, value):
        raise AttributeError("families are immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Family):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        from .dsl import parse_family, format_family

        return (parse_family, (format_family(self),))

    def __str__(self):
        from .dsl import format_family

        return format_family(self)

    def __repr__(self):
        return f"<{self}>"


def _intern(cls, key: tuple, **fields):
    key = (cls.kind,) + key
    node = _TABLE.get(key)
    if node is not None:
        return node
    node = object.__new__(cls)
    object.__setattr__(node, "_key", key)
    object.__setattr__(node, "_hash", hash(key))
    for name, value in fields.items():
        object.__setattr__(node, name, value)
    with _TABLE_LOCK:
        return _TABLE.setdefault(key, node)


class Empty(Family):
    __slots__ = ()
    kind = "empty"


class FullNode(Family):
    __slots__ = ()
    kind = "full"


class EMinimalNode(Family):
    """The one-hot points ``e_i`` (exactly ``Qi`` true)."""

    __slots__ = ()
    kind = "eminimal"


class Fin(Family):
    __slots__ = ("points",)
    kind = "fin"


class OmegaSum(Family):
    """Branch ``i`` sits under ``0^(phase + stride*i) 1`` and holds a copy of ``child``."""

    __slots__ = ("child", "stride", "phase")
    kind = "omegasum"


class Union(Family):
    """Child ``j < k-1`` under ``0^j 1``; the last child under ``0^(k-1)``."""

    __slots__ = ("children",)
    kind = "union"


class Guard(Family):
    __slots__ = ("pins", "child")
    kind = "guard"


class Adjoin(Family):
    """``child`` plus finitely many extra points, without any shifting."""

    __slots__ = ("child", "points")
    kind = "adjoin"


class LimitSum(Family):
    """Branch ``i`` under ``0^i 1`` holds a rank ``limit[start+i]`` tower.

    With ``closed`` the branches hold the closures of those towers.
    """

    __slots__ = ("limit", "start", "closed")
    kind = "limsum"


EMPTY = _intern(Empty, ())
FULL = _intern(FullNode, ())
EMINIMAL = _intern(EMinimalNode, ())


# ----------------------------------------------------------- constructors


def empty() -> Family:
    return EMPTY


def full() -> Family:
    return FULL


def eminimal() -> Family:
    return EMINIMAL


def fin(points: Iterable[PointTheory]) -> Family:
    points = frozenset(points)
    if not points:
        return EMPTY
    return _intern(Fin, (points,), points=points)


def omegasum(child: Family, stride: int = 1, phase: int = 0) -> Family:
    if stride < 1 or phase < 0:
        raise ValueError("omegasum needs stride >= 1 and phase >= 0")
    if child is EMPTY:
        return EMPTY
    return _intern(OmegaSum, (child, stride, phase), child=child, stride=stride, phase=phase)


def union(*children: Family) -> Family:
    if len(children) == 1 and not isinstance(children[0], Family):
        children = tuple(children[0])
    children = tuple(children)
    if not children or all(c is EMPTY for c in children):
        return EMPTY
    if len(children) == 1:
        return children[0]
    return _intern(Union, (children,), children=children)


def guard(pins: Mapping, child: Family) -> Family:
    """Pin ``Q_a = v`` for each ``(a, v)``; ``pins`` may also be a list of
    pairs, in which case contradictory pins give the empty family."""
    if isinstance(pins, Mapping):
        pairs = list(pins.items())
    else:
        pairs = list(pins)
    merged: dict = {}
    for a, v in pairs:
        a, v = int(a), int(v)
        if a < 0 or v not in (0, 1):
            raise ValueError(f"bad pin Q{a}={v}")
        if merged.get(a, v) != v:
            return EMPTY
        merged[a] = v
    if child is EMPTY:
        return EMPTY
    if not merged:
        return child
    key = tuple(sorted(merged.items()))
    return _intern(Guard, (key, child), pins=key, child=child)


def adjoin(child: Family, points: Iterable[PointTheory]) -> Family:
    points = frozenset(points)
    if isinstance(child, Adjoin):
        points = points | child.points
        child = child.child
    points = frozenset(p for p in points if not contains(child, p))
    if not points:
        return child
    if child is EMPTY:
        return fin(points)
    if isinstance(child, Fin):
        return fin(child.points | points)
    return _intern(Adjoin, (child, points), child=child, points=points)


def limitsum(limit: Ordinal, start: int = 0, closed: bool = False) -> Family:
    limit = Ordinal.of(limit)
    if not limit.is_limit:
        raise ValueError(f"limsum needs a limit ordinal, got {limit}")
    if start < 0:
        raise ValueError("start must be non-negative")
    return _intern(LimitSum, (limit, start, bool(closed)), limit=limit, start=start, closed=bool(closed))


# ----------------------------------------------------------------- towers

DEFAULT_ORDINAL_BOUND = Ordinal.omega_power(Ordinal.omega_power(1))  # w^w


def build_tower(alpha, n: int = 1, bound: Optional[Ordinal] = DEFAULT_ORDINAL_BOUND) -> Family:
    """A family of rank exactly ``alpha`` and degree exactly ``n``."""
    if isinstance(alpha, str):
        alpha = parse_ordinal(alpha)
    alpha = Ordinal.of(alpha)
    if n < 1:
        raise ValueError("tower degree must be at least 1")
    if bound is not None and compare(alpha, bound) >= 0:
        raise OrdinalBoundError(f"ordinal {alpha} is not below the bound {bound}")
    return _tower(alpha, n)


@lru_cache(maxsize=None)
def _tower(alpha: Ordinal, n: int) -> Family:
    if alpha.is_zero:
        # n copies of the single point, laid out by the union guards
        return fin(_union_lift(n, j, ZERO_POINT) for j in range(n))
    if n > 1:
        return union(*([_tower(alpha, 1)] * n))
    if alpha == ONE:
        return EMINIMAL
    if alpha.is_successor:
        return omegasum(_tower(alpha.predecessor(), 1))
    return limitsum(alpha, 0)


def limit_branch(node: LimitSum, i: int) -> Family:
    """Content of branch ``i`` of a :class:`LimitSum`."""
    target = node.limit.fundamental(node.start + i)
    tower = _tower(target, 1)
    if node.closed:
        from .topology import closure

        return closure(tower)
    return tower


# -------------------------------------------------------- guard geometry


def union_prefix(k: int, j: int) -> list:
    """Guard bits of child ``j`` in a ``k``-ary union."""
    return [0] * j + [1] if j < k - 1 else [0] * (k - 1)


def _union_lift(k: int, j: int, p: PointTheory) -> PointTheory:
    return p.prepend(union_prefix(k, j))


def union_branch(k: int, p: PointTheory):
    """``(j, tail)``: which child of a ``k``-ary union ``p`` falls under."""
    for j in range(k - 1):
        if p.value(j):
            return j, p.shift(j + 1)
    return k - 1, p.shift(k - 1)


def omega_prefix(node: OmegaSum, i: int) -> list:
    return [0] * (node.phase + node.stride * i) + [1]


def omega_branch(node: OmegaSum, p: PointTheory):
    """``(i, tail)`` for a point in branch ``i``; ``(None, None)`` for the
    all-false limit point, ``(-1, None)`` for points under no guard."""
    pos = p.first_one()
    if pos is None:
        return None, None
    offset = pos - node.phase
    if offset < 0 or offset % node.stride:
        return -1, None
    return offset // node.stride, p.shift(pos + 1)


def lift(node: Family, route, p: PointTheory) -> PointTheory:
    """Map a point of a sub-node back to ``node``'s coordinates.

    ``route`` is a branch index for OmegaSum, LimitSum and Union nodes and
    is ignored for Guard nodes.
    """
    if isinstance(node, OmegaSum):
        return p.prepend(omega_prefix(node, route))
    if isinstance(node, LimitSum):
        return p.prepend([0] * route + [1])
    if isinstance(node, Union):
        return _union_lift(len(node.children), route, p)
    if isinstance(node, Guard):
        return p.insert(dict(node.pins))
    raise TypeError(f"cannot lift through {node.kind}")


def guard_strip(node: Guard, p: PointTheory) -> Optional[PointTheory]:
    for a, v in node.pins:
        if p.value(a) != v:
            return None
    return p.remove(a for a, _ in node.pins)


# ----------------------------------------------------------- derivatives


@lru_cache(maxsize=None)
def cofactor(node: Family, b: int) -> Family:
    """The points of ``node`` with ``Q0 = b``, shifted down by one atom."""
    if node is EMPTY or node is FULL:
        return node
    if node is EMINIMAL:
        return fin([ZERO_POINT]) if b else EMINIMAL
    if isinstance(node, Fin):
        return fin(p.shift(1) for p in node.points if p.value(0) == b)
    if isinstance(node, OmegaSum):
        if b:
            return node.child if node.phase == 0 else EMPTY
        if node.phase:
            return omegasum(node.child, node.stride, node.phase - 1)
        return omegasum(node.child, node.stride, node.stride - 1)
    if isinstance(node, Union):
        cs = node.children
        if b:
            return cs[0]
        return union(*cs[1:])
    if isinstance(node, Guard):
        pins = dict(node.pins)
        if 0 in pins:
            if pins.pop(0) != b:
                return EMPTY
            return guard({a - 1: v for a, v in pins.items()}, node.child)
        return guard({a - 1: v for a, v in pins.items()}, cofactor(node.child, b))
    if isinstance(node, Adjoin):
        return adjoin(cofactor(node.child, b), (p.shift(1) for p in node.points if p.value(0) == b))
    if isinstance(node, LimitSum):
        if b:
            return limit_branch(node, 0)
        return limitsum(node.limit, node.start + 1, node.closed)
    raise TypeError(f"unknown family node {node!r}")


def cofactor_word(node: Family, bits: Iterable[int]) -> Family:
    for b in bits:
        if node is EMPTY:
            break
        node = cofactor(node, b)
    return node


# ------------------------------------------------------------- membership


def contains(node: Family, p: PointTheory) -> bool:
    while True:
        if node is EMPTY:
            return False
        if node is FULL:
            return True
        if node is EMINIMAL:
            return p.default == 0 and len(p.flipped) == 1
        if isinstance(node, Fin):
            return p in node.points
        if isinstance(node, OmegaSum):
            i, tail = omega_branch(node, p)
            if i is None or i < 0:
                return False
            node, p = node.child, tail
        elif isinstance(node, LimitSum):
            pos = p.first_one()
            if pos is None:
                return False
            node, p = limit_branch(node, pos), p.shift(pos + 1)
        elif isinstance(node, Union):
            j, tail = union_branch(len(node.children), p)
            node, p = node.children[j], tail
        elif isinstance(node, Guard):
            tail = guard_strip(node, p)
            if tail is None:
                return False
            node, p = node.child, tail
        elif isinstance(node, Adjoin):
            return p in node.points or contains(node.child, p)
        else:
            raise TypeError(f"unknown family node {node!r}")


def in_closure(node: Family, p: PointTheory) -> bool:
    """Whether ``p`` is in the topological closure of ``node``."""
    while True:
        if node is EMPTY:
            return False
        if node is FULL:
            return True
        if node is EMINIMAL:
            return p == ZERO_POINT or (p.default == 0 and len(p.flipped) == 1)
        if isinstance(node, Fin):
            return p in node.points
        if isinstance(node, (OmegaSum, LimitSum)):
            if p == ZERO_POINT:
                return True
            if isinstance(node, OmegaSum):
                i, tail = omega_branch(node, p)
                if i is None or i < 0:
                    return False
                node, p = node.child, tail
            else:
                pos = p.first_one()
                if pos is None:
                    return False
                node, p = limit_branch(node, pos), p.shift(pos + 1)
        elif isinstance(node, Union):
            j, tail = union_branch(len(node.children), p)
            node, p = node.children[j], tail
        elif isinstance(node, Guard):
            tail = guard_strip(node, p)
            if tail is None:
                return False
            node, p = node.child, tail
        elif isinstance(node, Adjoin):
            return p in node.points or in_closure(node.child, p)
        else:
            raise TypeError(f"unknown family node {node!r}")


def clear_caches() -> None:
    """Drop memo tables (interned nodes stay valid)."""
    cofactor.cache_clear()
    _tower.cache_clear()
