import pytest

from ranklab.errors import OrdinalSyntaxError
from ranklab.ordinals import (
    EMPTY_RD,
    INFINITE_RD,
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    RankDegree,
    RankValue,
    add,
    compare,
    degree_sum_at_max,
    format_ordinal,
    omax,
    parse_ordinal,
    succ,
)


@pytest.mark.parametrize("text", ["0", "7", "w", "w+3", "w*2", "w^2*4+w*2+1", "w^w", "w^(w+1)", "w^w*3+w^5"])
def test_parse_format_round_trip(text):
    assert format_ordinal(parse_ordinal(text)) == text


@pytest.mark.parametrize("text", ["", "w+", "2w", "w^", "(w", "v"])
def test_parse_errors(text):
    with pytest.raises(OrdinalSyntaxError):
        parse_ordinal(text)


def test_ordering():
    chain = ["0", "1", "5", "w", "w+1", "w*2", "w^2", "w^2+w", "w^w"]
    ords = [parse_ordinal(t) for t in chain]
    for a, b in zip(ords, ords[1:]):
        assert compare(a, b) < 0 and a < b and omax(a, b) == b
    assert Ordinal.of(3) == 3 and OMEGA > 1000


def test_addition_absorbs_smaller_terms():
    assert add(Ordinal.of(1), OMEGA) == OMEGA
    assert add(OMEGA, Ordinal.of(1)) == parse_ordinal("w+1")
    assert add(parse_ordinal("w+5"), parse_ordinal("w")) == parse_ordinal("w*2")
    assert succ(OMEGA) == OMEGA + 1


def test_kinds():
    assert ZERO.is_zero and ONE.is_successor and OMEGA.is_limit
    assert parse_ordinal("w+2").predecessor() == OMEGA + 1
    with pytest.raises(ValueError):
        OMEGA.predecessor()


@pytest.mark.parametrize("text", ["w", "w*2", "w^2", "w^w", "w^2+w"])
def test_fundamental_sequences_increase_to_the_limit(text):
    alpha = parse_ordinal(text)
    seq = [alpha.fundamental(i) for i in range(1, 6)]
    assert all(a < b for a, b in zip(seq, seq[1:]))
    assert all(a < alpha for a in seq)


def test_rank_values():
    assert RankValue.of(-1).is_minus_one
    assert RankValue.of(-1) < RankValue.of(0) < RankValue.of(OMEGA) < INFINITE_RD.rank
    assert RankValue.of(2).succ() == 3


def test_rank_degree_validation_and_text():
    assert str(RankDegree.of(1, 1)) == "RS=1, ds=1"
    assert str(INFINITE_RD) == "RS=∞" and str(EMPTY_RD) == "RS=-1"
    with pytest.raises(ValueError):
        RankDegree.of(2)
    with pytest.raises(ValueError):
        RankDegree(INFINITE_RD.rank, 3)


def test_degree_sum_at_max():
    parts = [RankDegree.of(1, 2), RankDegree.of(1, 1), RankDegree.of(0, 5)]
    assert degree_sum_at_max(parts) == RankDegree.of(1, 3)
    assert degree_sum_at_max([RankDegree.of(3, 1), INFINITE_RD]) == INFINITE_RD
    assert degree_sum_at_max([EMPTY_RD, RankDegree.of(0, 1)]) == RankDegree.of(0, 1)
