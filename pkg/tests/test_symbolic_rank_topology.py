import itertools
import random

import pytest

from ranklab.errors import NonStabilizingFamily, NotEClosedError, NotInClosureError, OracleBoundError
from ranklab.logic import Not, evaluate, parse_sentence
from ranklab.ordinals import INFINITE_RD, OMEGA, RankDegree
from ranklab.symbolic import (
    ALEPH0,
    CONTINUUM,
    EMINIMAL,
    EMPTY,
    FULL,
    ONE_POINT,
    ZERO_POINT,
    Cardinal,
    PointTheory,
    accumulation_points,
    adjoin,
    build_tower,
    cardinality,
    cb_rank,
    closure,
    contains,
    enumerate_points,
    fin,
    guard,
    in_closure,
    is_e_closed,
    isolated_points,
    isolating_sentence,
    least_generating_set,
    limitsum,
    omegasum,
    rank_by_definition_oracle,
    rank_degree,
    restrict,
    rhd_pt,
    rhd_tt,
    separating_sentence,
    union,
)
from ranklab.symbolic.corpus import random_family, random_point, random_sentence
from ranklab.symbolic.topology import missing_limits

e = PointTheory.one_hot


@pytest.mark.parametrize(
    "family,expected",
    [
        (omegasum(EMINIMAL), RankDegree.of(2, 1)),
        (union(EMINIMAL, EMINIMAL), RankDegree.of(1, 2)),
        (omegasum(fin([ZERO_POINT])), RankDegree.of(1, 1)),
        (adjoin(EMINIMAL, [ZERO_POINT]), RankDegree.of(1, 1)),
        (adjoin(EMINIMAL, [ONE_POINT]), RankDegree.of(1, 1)),
        (adjoin(fin([e(0)]), [e(1), e(2)]), RankDegree.of(0, 3)),
        (guard({0: 1}, build_tower(3, 2)), RankDegree.of(3, 2)),
        (union(build_tower(2, 1), EMINIMAL, fin([ZERO_POINT])), RankDegree.of(2, 1)),
        (union(FULL, EMINIMAL), INFINITE_RD),
        (omegasum(FULL), INFINITE_RD),
        (limitsum(OMEGA, 0), RankDegree.of(OMEGA, 1)),
        (limitsum(OMEGA, 3, True), RankDegree.of(OMEGA, 1)),
    ],
    ids=str,
)
def test_rank_degree_examples(family, expected):
    assert rank_degree(family) == expected


def test_cardinality_examples():
    assert cardinality(EMPTY) == 0
    assert cardinality(fin([e(0), e(1), ZERO_POINT])) == 3
    assert cardinality(EMINIMAL) == ALEPH0
    assert cardinality(FULL) == CONTINUUM
    assert cardinality(omegasum(FULL)) == CONTINUUM
    assert cardinality(union(EMINIMAL, fin([ZERO_POINT]))) == ALEPH0
    assert Cardinal.finite(2) + ALEPH0 == ALEPH0 and ALEPH0 + CONTINUUM == CONTINUUM


def test_restrict_matches_pointwise_filtering():
    rng = random.Random(12)
    for _ in range(300):
        F = random_family(rng, 3)
        phi = random_sentence(rng, 5, rng.randint(1, 6))
        R = restrict(F, phi)
        for _ in range(5):
            p = random_point(rng, 7)
            assert contains(R, p) == (contains(F, p) and evaluate(phi, p)), (str(F), str(phi), str(p))


def test_restrict_examples():
    assert cardinality(restrict(EMINIMAL, parse_sentence("Q0"))) == 1
    assert cardinality(restrict(EMINIMAL, parse_sentence("!Q0"))) == ALEPH0
    assert restrict(EMINIMAL, parse_sentence("Q0 & Q1")) is EMPTY
    assert restrict(FULL, parse_sentence("true")) is FULL
    assert rank_degree(restrict(FULL, parse_sentence("Q0 & !Q3"))).rank.is_infinity


def test_pt_and_tt():
    q0 = parse_sentence("Q0")
    assert rhd_pt(q0, EMINIMAL) and not rhd_tt(q0, EMINIMAL)
    assert rhd_tt(q0, guard({0: 1}, FULL))
    assert rhd_tt(Not(q0), EMPTY) and not rhd_pt(q0, EMPTY)


# ---------------------------------------------------------------- closure


def test_closure_examples():
    assert closure(EMINIMAL) == adjoin(EMINIMAL, [ZERO_POINT])
    assert not is_e_closed(EMINIMAL) and is_e_closed(closure(EMINIMAL))
    assert closure(FULL) is FULL and closure(build_tower(0, 3)) is build_tower(0, 3)
    assert missing_limits(EMINIMAL) == {ZERO_POINT}
    assert missing_limits(FULL) == frozenset()


def test_closure_contains_family_and_is_idempotent():
    rng = random.Random(3)
    for _ in range(200):
        F = random_family(rng, 3)
        C = closure(F)
        assert closure(C) == C
        if cardinality(F) != CONTINUUM:
            for p in itertools.islice(enumerate_points(F), 5):
                assert contains(F, p) and contains(C, p) and in_closure(F, p)


def test_cb_ranks():
    E = closure(EMINIMAL)
    assert cb_rank(E, ZERO_POINT) == 1 and cb_rank(E, e(4)) == 0
    assert cb_rank(closure(omegasum(EMINIMAL)), ZERO_POINT) == 2
    assert cb_rank(closure(build_tower(OMEGA, 1)), ZERO_POINT) == OMEGA
    assert cb_rank(FULL, e(3)).is_infinity
    with pytest.raises(NotInClosureError):
        cb_rank(E, PointTheory.from_bits("11"))


def test_isolated_points_and_sentences():
    E = closure(EMINIMAL)
    assert isolated_points(E) == EMINIMAL
    assert isolating_sentence(E, ZERO_POINT) is None
    phi = isolating_sentence(E, e(3))
    assert cardinality(restrict(E, phi)) == 1 and evaluate(phi, e(3))
    assert isolated_points(FULL) is EMPTY


def test_point_enumeration():
    assert list(itertools.islice(enumerate_points(EMINIMAL), 5)) == [e(i) for i in range(5)]
    pts = list(enumerate_points(build_tower(0, 3)))
    assert len(pts) == 3 == len(set(pts))
    got = set(itertools.islice(enumerate_points(omegasum(EMINIMAL)), 60))
    assert PointTheory.from_bits("0100001") in got


def test_accumulation_points():
    rep = accumulation_points(EMINIMAL)
    assert rep.points == (ZERO_POINT,) and rep.complete and not rep.kernel
    rep = accumulation_points(omegasum(EMINIMAL), sample=4)
    assert rep.count == ALEPH0 and not rep.complete and len(rep.points) == 4
    assert rep.points[0] == ZERO_POINT
    assert accumulation_points(FULL).kernel
    assert accumulation_points(omegasum(FULL)).points == (ZERO_POINT,)


def test_least_generating_sets():
    gen = least_generating_set(closure(build_tower(0, 2)))
    assert gen.cardinality == 2
    assert least_generating_set(FULL) is None
    with pytest.raises(NotEClosedError):
        least_generating_set(EMINIMAL)
    gen = least_generating_set(closure(build_tower(2, 1)))
    assert closure(gen.family) == closure(build_tower(2, 1))


# ------------------------------------------------------------- separation


def test_separation_examples():
    phi = separating_sentence(guard({2: 1}, EMINIMAL), guard({2: 0}, FULL))
    assert phi is not None
    assert rhd_tt(phi, guard({2: 1}, EMINIMAL)) and rhd_tt(Not(phi), guard({2: 0}, FULL))
    # zero is a limit of EMinimal, so EMinimal and {0} cannot be separated
    assert separating_sentence(EMINIMAL, fin([ZERO_POINT])) is None
    assert separating_sentence(EMPTY, FULL) is not None


def test_separating_sentences_are_sound():
    rng = random.Random(21)
    found = 0
    for _ in range(150):
        A, B = guard({0: 1}, random_family(rng, 2)), guard({0: 0}, random_family(rng, 2))
        phi = separating_sentence(A, B)
        assert phi is not None
        assert rhd_tt(phi, A) and rhd_tt(Not(phi), B)
        found += 1
    assert found == 150


# ------------------------------------------------------------------ oracle


def test_oracle_bounds_and_limits():
    with pytest.raises(OracleBoundError):
        rank_by_definition_oracle(FULL, 0)
    with pytest.raises(OracleBoundError):
        rank_by_definition_oracle(FULL, 4)
    with pytest.raises(NonStabilizingFamily):
        rank_by_definition_oracle(limitsum(OMEGA, 0), 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_oracle_on_towers_and_random_families(m):
    for alpha in range(4):
        for n in (1, 2, 3):
            assert rank_by_definition_oracle(build_tower(alpha, n), m) == RankDegree.of(alpha, n)
    rng = random.Random(m)
    for _ in range(150):
        F = random_family(rng, 3, allow_limits=False)
        assert rank_by_definition_oracle(F, m) == rank_degree(F), str(F)
