"""Bounded and random families for testing and the verification suites."""

from __future__ import annotations

import random
from typing import Iterator, List

from ..logic import FALSE, TRUE, And, Atom, Iff, Implies, Not, Or, Sentence
from ..ordinals import OMEGA
from .nodes import (
    EMINIMAL,
    EMPTY,
    FULL,
    Family,
    adjoin,
    build_tower,
    fin,
    guard,
    omegasum,
    union,
)
from .points import ZERO_POINT, PointTheory
from .rank import rank_degree

LEAVES = (
    EMPTY,
    fin([ZERO_POINT]),
    fin([ZERO_POINT, PointTheory.one_hot(0)]),
    EMINIMAL,
    FULL,
)

UNARY = (
    ("omegasum", lambda c: omegasum(c)),
    ("guard Q0=1", lambda c: guard({0: 1}, c)),
    ("guard Q1=0", lambda c: guard({1: 0}, c)),
    ("adjoin 1(1)", lambda c: adjoin(c, [PointTheory(1)])),
)


def _terms_of_size(size: int, memo: dict) -> List[Family]:
    if size in memo:
        return memo[size]
    out: List[Family] = []
    if size == 1:
        out.extend(LEAVES)
    else:
        for _, op in UNARY:
            out.extend(op(c) for c in _terms_of_size(size - 1, memo))
        # binary unions: sizes split as 1 + a + b
        for a in range(1, size - 1):
            b = size - 1 - a
            for x in _terms_of_size(a, memo):
                for y in _terms_of_size(b, memo):
                    out.append(union(x, y))
        # ternary unions
        for a in range(1, size - 2):
            for b in range(1, size - 1 - a):
                c = size - 1 - a - b
                if c < 1:
                    continue
                for x in _terms_of_size(a, memo):
                    for y in _terms_of_size(b, memo):
                        for z in _terms_of_size(c, memo):
                            out.append(union(x, y, z))
    memo[size] = out
    return out


def bounded_corpus(max_size: int = 4, max_rank: int = 3) -> List[Family]:
    """Distinct families built from at most ``max_size`` constructors.

    Families of ordinal rank above ``max_rank`` are left out; rank oo
    families stay in.
    """
    memo: dict = {}
    seen = set()
    out = []
    for size in range(1, max_size + 1):
        for term in _terms_of_size(size, memo):
            if term in seen:
                continue
            seen.add(term)
            rank = rank_degree(term).rank
            if rank.is_ordinal and rank.ordinal > max_rank:
                continue
            out.append(term)
    return out


def iter_corpus(max_size: int = 4, max_rank: int = 3) -> Iterator[Family]:
    return iter(bounded_corpus(max_size, max_rank))


def random_point(rng: random.Random, span: int = 4) -> PointTheory:
    default = 1 if rng.random() < 0.15 else 0
    flipped = frozenset(i for i in range(span) if rng.random() < 0.4)
    return PointTheory(default, flipped)


def random_family(rng: random.Random, depth: int = 3, allow_limits: bool = True) -> Family:
    """A random grammar term; every constructor appears with some probability."""
    if depth <= 0:
        return rng.choice(
            [EMPTY, FULL, EMINIMAL, fin([random_point(rng, 3) for _ in range(rng.randint(1, 3))])]
        )
    roll = rng.random()
    sub = lambda: random_family(rng, depth - 1, allow_limits)  # noqa: E731
    if roll < 0.14:
        return rng.choice([EMPTY, FULL, EMINIMAL])
    if roll < 0.24:
        return fin([random_point(rng) for _ in range(rng.randint(1, 4))])
    if roll < 0.40:
        return omegasum(sub(), rng.choice((1, 1, 2, 3)), rng.choice((0, 0, 1, 2)))
    if roll < 0.60:
        return union(*(sub() for _ in range(rng.randint(2, 3))))
    if roll < 0.72:
        atoms = rng.sample(range(5), rng.randint(1, 2))
        return guard({a: rng.randint(0, 1) for a in atoms}, sub())
    if roll < 0.82:
        return adjoin(sub(), [random_point(rng) for _ in range(rng.randint(1, 2))])
    alphas = [0, 1, 2, 3]
    if allow_limits:
        alphas += [OMEGA, OMEGA + 1]
    return build_tower(rng.choice(alphas), rng.randint(1, 3))


def random_sentence(rng: random.Random, atoms: int = 4, size: int = 4) -> Sentence:
    if size <= 1:
        roll = rng.random()
        if roll < 0.08:
            return TRUE
        if roll < 0.16:
            return FALSE
        return Atom(rng.randrange(atoms))
    roll = rng.random()
    if roll < 0.2:
        return Not(random_sentence(rng, atoms, size - 1))
    left = rng.randint(1, size - 1)
    a = random_sentence(rng, atoms, left)
    b = random_sentence(rng, atoms, size - left)
    return rng.choice((And, Or, And, Or, Implies, Iff))(a, b)
