"""Rank and degree evaluated from the inductive definition.

This is deliberately independent of the structural recursion in
:mod:`ranklab.symbolic.rank`.  The only facts it takes from the grammar are
the restriction of a family to a cell of the first ``m`` atoms (as a new
family over the remaining atoms) and whether that family is empty, finite
or infinite.

Restricting to all ``2^m`` cells over and over yields a finite graph of
families when the family is eventually self-similar.  On that graph the
inductive definition becomes a fixpoint computation:

* rank >= 0 iff nonempty, rank >= 1 iff infinite;
* rank >= b+1 iff the family has infinitely many pairwise inconsistent
  sentences with restrictions of rank >= b.  In a finite graph that happens
  exactly when some reachable family C has a cell word leading from C back
  to C and a different cell leading from C to a family of rank >= b
  (walking around the loop peels off infinitely many disjoint cells);
* a family in every level has rank oo;
* the degree of a family of rank a is the least fixpoint of
  ``M(X) = max(1, sum of M over the 2^m cells of X)`` on the families of
  rank >= a.
"""

from __future__ import annotations

import itertools
from typing import Dict, List

from ..errors import NonStabilizingFamily, OracleBoundError
from ..ordinals import EMPTY_RD, INFINITE_RD, RankDegree
from .nodes import EMPTY, Family, cofactor_word
from .rank import cardinality

MAX_ATOM_BOUND = 3
NODE_CAP = 4096


def _graph(root: Family, m: int):
    blocks = list(itertools.product((0, 1), repeat=m))
    index: Dict[Family, int] = {root: 0}
    nodes: List[Family] = [root]
    edges: List[List[int]] = []
    i = 0
    while i < len(nodes):
        succ = []
        for block in blocks:
            child = cofactor_word(nodes[i], block)
            if child not in index:
                if len(nodes) >= NODE_CAP:
                    raise NonStabilizingFamily(
                        f"more than {NODE_CAP} distinct restrictions; the family does not stabilize"
                    )
                index[child] = len(nodes)
                nodes.append(child)
            succ.append(index[child])
        edges.append(succ)
        i += 1
    return nodes, edges


def _reachability(edges: List[List[int]]) -> List[frozenset]:
    """``reach[v]``: nodes reachable from ``v`` by a path of length >= 0."""
    n = len(edges)
    reach = []
    for v in range(n):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in edges[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach.append(frozenset(seen))
    return reach


def rank_by_definition_oracle(node: Family, m: int = 2) -> RankDegree:
    """Rank and degree of ``node`` from the definition, stepping ``m`` atoms at a time."""
    if not 1 <= m <= MAX_ATOM_BOUND:
        raise OracleBoundError(f"atom bound must be between 1 and {MAX_ATOM_BOUND}, got {m}")
    if node is EMPTY:
        return EMPTY_RD
    nodes, edges = _graph(node, m)
    n = len(nodes)
    reach = _reachability(edges)
    cards = [cardinality(x) for x in nodes]

    nonempty = frozenset(v for v in range(n) if cards[v] != 0)
    levels = [nonempty]
    infinite = frozenset(v for v in range(n) if not cards[v].is_finite)

    def next_level(current: frozenset) -> frozenset:
        good = set()
        for c in range(n):
            for b, target in enumerate(edges[c]):
                if c not in reach[target]:
                    continue
                # a loop through cell b; any other cell reaching the level?
                if any(
                    b2 != b and (reach[t2] & current)
                    for b2, t2 in enumerate(edges[c])
                ):
                    good.add(c)
                    break
        return frozenset(v for v in range(n) if reach[v] & good)

    # level 1 by the definition must match the cardinality split
    level1 = next_level(nonempty)
    if level1 != infinite:
        raise AssertionError("the restriction graph disagrees with the finite/infinite split")
    levels.append(infinite)
    while True:
        nxt = next_level(levels[-1]) & levels[-1]
        if nxt == levels[-1]:
            break
        levels.append(nxt)
    stable = levels[-1]

    def rank_of(v: int):
        if v in stable and stable:
            return None  # oo
        return max(k for k, lev in enumerate(levels) if v in lev)

    top = rank_of(0)
    if top is None:
        return INFINITE_RD
    at_top = [v for v in range(n) if v in levels[top]]
    degree = {v: 1 for v in at_top}
    for _ in range(n * 64 + 64):
        changed = False
        for v in at_top:
            total = sum(degree.get(t, 0) for t in edges[v])
            new = max(1, total)
            if new != degree[v]:
                degree[v] = new
                changed = True
        if not changed:
            break
    else:
        raise NonStabilizingFamily("degree iteration did not converge")
    return RankDegree.of(top, degree[0])
