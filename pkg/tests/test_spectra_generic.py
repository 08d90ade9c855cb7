import random

import pytest

from ranklab.logic import FALSE, TRUE, Not, enumerate_functions, parse_sentence
from ranklab.ordinals import INFINITY, OMEGA, RankDegree
from ranklab.symbolic import (
    ALEPH0,
    CONTINUUM,
    CONTINUUM_KERNEL,
    EMINIMAL,
    EMPTY,
    FULL,
    ZERO_POINT,
    PointTheory,
    adjoin,
    build_tower,
    cardinality,
    closure,
    count_generic,
    count_nongeneric,
    fin,
    generic_theories,
    guard,
    is_generic_sentence,
    is_p_complete,
    omegasum,
    pt_spectrum,
    ranking_sentence,
    rank_degree,
    restrict,
    spectrum_rd,
    union,
)
from ranklab.symbolic.corpus import random_family

e = PointTheory.one_hot


# ------------------------------------------------------------ rd spectra


def test_spectrum_text_forms():
    assert str(spectrum_rd(EMPTY)) == "{}"
    assert str(spectrum_rd(FULL)) == "{∞}"
    assert str(spectrum_rd(build_tower(OMEGA + 1, 2))) == "O[(w+1,2)]"
    assert str(spectrum_rd(union(FULL, EMINIMAL, EMINIMAL))) == "O[(1,2)] ∪ {∞}"


def test_open_segment_below_a_limit_of_ranks():
    # branches carry ranked parts of rank 0 each, with no largest ranked part
    spec = spectrum_rd(omegasum(union(FULL, fin([ZERO_POINT]))))
    assert spec.kind == "segment+infinity" and spec.beta == 1 and spec.n == 0
    assert spec.contains(RankDegree.of(0, 100))
    assert not spec.contains(RankDegree.of(1, 1))
    assert not spec.admits_rank(1) and spec.admits_rank(0)
    spec = spectrum_rd(omegasum(union(FULL, EMINIMAL)))
    assert spec.beta == 2 and spec.n == 0


def test_spectrum_contains_and_ranks():
    spec = spectrum_rd(build_tower(2, 3))
    assert spec.contains(RankDegree.of(2, 3)) and not spec.contains(RankDegree.of(2, 4))
    assert spec.contains(RankDegree.of(1, 999)) and not spec.contains(RankDegree.of(-1))
    assert not spec.contains(rank_degree(FULL))
    assert spectrum_rd(union(FULL, EMINIMAL)).contains(rank_degree(FULL))


def test_every_restriction_lies_in_the_spectrum():
    rng = random.Random(17)
    fns = list(enumerate_functions(3))
    for _ in range(60):
        F = random_family(rng, 3)
        spec = spectrum_rd(F)
        for fn in fns:
            R = restrict(F, fn)
            if R is not EMPTY:
                assert spec.contains(rank_degree(R)), (str(F), str(fn.to_sentence()))


def test_ranking_sentences():
    T = build_tower(3, 2)
    for alpha in range(4):
        phi = ranking_sentence(T, alpha)
        assert rank_degree(restrict(T, phi)).rank == alpha
    assert ranking_sentence(T, 4) is None
    assert ranking_sentence(T, -1) == FALSE
    assert ranking_sentence(FULL, 0) is None
    assert ranking_sentence(union(FULL, EMINIMAL), 1) is not None
    assert ranking_sentence(build_tower(2, 1), 1) == parse_sentence("Q0")
    assert ranking_sentence(FULL, INFINITY) == TRUE
    assert ranking_sentence(T, INFINITY) is None


# ------------------------------------------------------------- pt spectra


def test_cardinality_spectra():
    assert str(pt_spectrum(fin([e(0), e(1), e(2)]))) == "{1, 2, 3}"
    assert str(pt_spectrum(FULL)) == "{continuum}"
    assert str(pt_spectrum(closure(EMINIMAL))) == "{1, 2, ...} ∪ {aleph0}"
    s = pt_spectrum(union(FULL, EMINIMAL))
    assert s.finite_bound is None and s.infinite_part == {ALEPH0, CONTINUUM}
    s = pt_spectrum(union(FULL, fin([ZERO_POINT, e(2)])))
    assert s.finite_bound == 2 and s.infinite_part == {CONTINUUM}
    # every branch has a perfect part, so no definable set is countably infinite
    s = pt_spectrum(omegasum(union(FULL, fin([ZERO_POINT]))))
    assert s.finite_bound is None and s.infinite_part == {CONTINUUM}
    assert pt_spectrum(omegasum(FULL)).infinite_part == {CONTINUUM}
    assert pt_spectrum(EMPTY).contains(1) is False


# ---------------------------------------------------------------- generic


def test_generic_sentences():
    T = build_tower(1, 2)  # two copies of EMinimal
    assert is_generic_sentence(TRUE, T)
    assert not is_generic_sentence(parse_sentence("Q0"), T)
    assert not is_generic_sentence(parse_sentence("!Q0"), T)
    assert is_generic_sentence(parse_sentence("Q0 | !Q1"), T)
    assert is_generic_sentence(parse_sentence("Q0"), union(FULL, EMINIMAL))
    assert not is_generic_sentence(parse_sentence("!Q0"), union(FULL, EMINIMAL))


def test_generic_theories_of_ranked_families():
    assert generic_theories(EMPTY) == []
    assert generic_theories(EMINIMAL) == [ZERO_POINT]
    gens = generic_theories(build_tower(2, 3))
    assert len(gens) == 3 and count_generic(build_tower(2, 3)) == 3
    F = fin([e(0), e(5)])
    assert set(generic_theories(F)) == {e(0), e(5)}
    assert count_nongeneric(F) == 0
    assert count_nongeneric(EMINIMAL) == ALEPH0
    assert count_nongeneric(adjoin(EMINIMAL, [ZERO_POINT])) == ALEPH0


def test_generic_theories_of_rank_infinity_families():
    assert generic_theories(FULL) is CONTINUUM_KERNEL
    assert count_generic(FULL) == CONTINUUM
    assert count_nongeneric(FULL) == 0
    assert count_nongeneric(union(FULL, fin([e(0), e(1)]))) == 2
    assert count_nongeneric(union(FULL, EMINIMAL)) == ALEPH0
    assert count_nongeneric(omegasum(guard({0: 1}, FULL))) == 0


@pytest.mark.parametrize("alpha,n", [(0, 1), (0, 3), (1, 2), (2, 2), (OMEGA, 1), (OMEGA + 1, 3)])
def test_top_points_are_limits_of_generic_restrictions(alpha, n):
    T = build_tower(alpha, n)
    for p in generic_theories(T):
        # every cube around a generic theory keeps positive rank alpha
        for depth in (1, 3, 6):
            cube = parse_sentence(" & ".join(f"{'' if p.value(i) else '!'}Q{i}" for i in range(depth)))
            assert rank_degree(restrict(T, cube)).rank == alpha


def test_p_completeness():
    E = closure(EMINIMAL)
    assert is_p_complete(parse_sentence("Q1"), E)
    assert not is_p_complete(parse_sentence("!Q1"), E)
    assert not is_p_complete(FALSE, E)
    assert cardinality(restrict(E, Not(parse_sentence("Q1")))) == ALEPH0
