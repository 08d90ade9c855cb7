import itertools

import pytest

from ranklab.errors import SentenceSyntaxError, SupportCapExceeded, UnboundAtomError
from ranklab.logic import (
    FALSE,
    TRUE,
    And,
    Atom,
    BoolFn,
    Iff,
    Implies,
    Not,
    Or,
    canonical,
    conj,
    cube,
    disj,
    entails,
    enumerate_functions,
    enumerate_sentences,
    equivalent,
    evaluate,
    format_sentence,
    is_consistent,
    literal,
    parse_sentence,
    support,
    truth_function,
)

Q0, Q1, Q2 = Atom(0), Atom(1), Atom(2)


def brute_equivalent(a, b, atoms):
    return all(
        evaluate(a, dict(zip(atoms, bits))) == evaluate(b, dict(zip(atoms, bits)))
        for bits in itertools.product((0, 1), repeat=len(atoms))
    )


def test_parse_precedence():
    assert parse_sentence("Q0 | Q1 & Q2") == Or(Q0, And(Q1, Q2))
    assert parse_sentence("!Q0 & Q1") == And(Not(Q0), Q1)
    assert parse_sentence("Q0 -> Q1 -> Q2") == Implies(Q0, Implies(Q1, Q2))
    assert parse_sentence("Q0 <-> Q1 | Q2") == Iff(Q0, Or(Q1, Q2))
    assert parse_sentence("(true)") == TRUE
    assert parse_sentence("false") == FALSE


@pytest.mark.parametrize("text", ["", "Q0 &", "Q", "(Q0", "Q0 Q1", "Q0 % Q1", "x"])
def test_parse_errors_carry_position(text):
    with pytest.raises(SentenceSyntaxError) as err:
        parse_sentence(text)
    assert err.value.position >= 0


@pytest.mark.parametrize(
    "text",
    ["Q0", "!Q0", "Q0 & !Q1 | Q2", "(Q0 | Q1) & Q2", "Q0 -> (Q1 <-> !Q2)", "!(Q0 & Q1)", "(Q0 -> Q1) -> Q2"],
)
def test_format_round_trip(text):
    phi = parse_sentence(text)
    assert parse_sentence(format_sentence(phi)) == phi


def test_evaluate_and_unbound_atoms():
    phi = parse_sentence("Q0 -> Q1")
    assert evaluate(phi, {0: 1, 1: 1}) and not evaluate(phi, {0: 1, 1: 0})
    with pytest.raises(UnboundAtomError):
        evaluate(phi, {0: 1})


def test_support_and_reduction():
    phi = parse_sentence("(Q0 & Q3) | (Q0 & !Q3)")
    assert support(phi) == {0, 3}
    fn = truth_function(phi)
    assert fn.support == (0,)
    assert canonical(phi) == Q0


def test_canonical_identifies_equivalent_sentences():
    a = parse_sentence("Q0 -> Q1")
    b = parse_sentence("!Q0 | Q1")
    assert canonical(a) == canonical(b)
    assert equivalent(a, b)
    assert not equivalent(a, parse_sentence("Q1 -> Q0"))


def test_entailment_and_consistency():
    assert entails(parse_sentence("Q0 & Q1"), Q0)
    assert not entails(Q0, parse_sentence("Q0 & Q1"))
    assert entails(FALSE, Q2)
    assert not is_consistent(parse_sentence("Q0 & !Q0"))
    assert is_consistent(Q2)


def test_constructors():
    assert conj() == TRUE and disj() == FALSE
    assert literal(3, 0) == Not(Atom(3))
    c = cube({0: 1, 2: 0})
    assert evaluate(c, {0: 1, 2: 0}) and not evaluate(c, {0: 1, 2: 1})


def test_enumeration_counts_and_distinctness():
    for m in range(4):
        fns = list(enumerate_functions(m))
        assert len(fns) == 2 ** (2 ** m) == len(set(fns))
        sentences = list(enumerate_sentences(m))
        assert len({truth_function(s) for s in sentences}) == len(sentences)
    with pytest.raises(SupportCapExceeded):
        list(enumerate_functions(5))


def test_boolfn_round_trip_and_cofactor():
    for fn in enumerate_functions(3):
        assert truth_function(fn.to_sentence()) == fn
        assert fn.negate().negate() == fn
        for v in (0, 1):
            shifted = fn.cofactor_first(v)
            for bits in itertools.product((0, 1), repeat=2):
                rest = {i + 1: b for i, b in enumerate(bits)}
                assert shifted.value({i: b for i, b in enumerate(bits)}) == fn.value({0: v, **rest})


def test_truth_function_matches_brute_force():
    samples = ["Q0 <-> Q2", "!(Q0 -> Q1) | Q2", "(Q0 | Q1) & (!Q0 | Q2)", "Q1 -> Q1"]
    for text in samples:
        phi = parse_sentence(text)
        assert brute_equivalent(phi, truth_function(phi).to_sentence(), [0, 1, 2])


def test_constant_functions():
    assert BoolFn.const(True).is_true and BoolFn.const(False).is_false
    assert truth_function(parse_sentence("Q4 | !Q4")).is_true
