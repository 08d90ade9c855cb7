import random

import pytest

from ranklab import finite as fm
from ranklab.errors import FamilySyntaxError, SupportOverflow
from ranklab.logic import Not, enumerate_functions, evaluate, parse_sentence
from ranklab.ordinals import RankDegree

FF = fm.FiniteFamily


def test_construction_and_text():
    fam = FF.of(3, ["100", "011"])
    assert len(fam) == 2
    assert fm.format_finite_family(fam) == "fin(n=3){011, 100}"
    assert fm.parse_finite_family(str(fam)) == fam
    assert fam.assignment(1) == {0: 1, 1: 0, 2: 0}
    with pytest.raises(ValueError):
        FF.of(2, ["101"])


@pytest.mark.parametrize("text", ["fin(n=2){0}", "fin{01}", "fin(n=2){01,2x}", "fin(n=2)"])
def test_parse_errors(text):
    with pytest.raises(FamilySyntaxError):
        fm.parse_finite_family(text)


def test_rank_degree_counts_members():
    assert fm.rank_degree(FF.of(2, [])) == RankDegree.of(-1)
    for k in range(1, 5):
        fam = FF(2, frozenset(range(k)))
        assert fm.rank_degree(fam) == RankDegree.of(0, k)


def test_satisfaction_relations():
    fam = FF.of(2, ["10", "11"])
    q0, q1 = parse_sentence("Q0"), parse_sentence("Q1")
    assert fm.rhd_tt(q0, fam) and fm.rhd_pt(q0, fam)
    assert fm.rhd_pt(q1, fam) and not fm.rhd_tt(q1, fam)
    assert fm.rhd_pt_lambda(q1, fam) == 1
    assert fm.neighborhood(fam, q1) == FF.of(2, ["11"])
    assert fm.is_p_complete(q1, fam) and not fm.is_p_complete(q0, fam)
    assert fm.is_generic(q0, fam) and not fm.is_generic(q1, fam)


def test_sentence_outside_the_language_is_rejected():
    with pytest.raises(SupportOverflow):
        fm.rhd_pt(parse_sentence("Q4"), FF.of(2, ["01"]))


def test_characteristic_sentence_defines_the_family():
    rng = random.Random(1)
    for _ in range(50):
        fam = fm.random_family(rng)
        chi = fm.characteristic_sentence(fam)
        models = {m for m in range(1 << fam.atom_count) if evaluate(chi, fam.assignment(m))}
        assert models == set(fam.members)


def test_delta_nabla_membership():
    fam = FF.of(2, ["10", "11"])
    dn = fm.delta_nabla(fam)
    assert dn.in_delta(parse_sentence("Q0"))
    assert not dn.in_delta(parse_sentence("Q1"))
    assert dn.in_nabla(parse_sentence("Q1")) and dn.in_nabla(parse_sentence("!Q1"))
    assert not dn.in_nabla(parse_sentence("!Q0"))
    assert dn.nabla_models == fam.members


def test_separation_iff_disjoint():
    a, b = FF.of(2, ["00", "01"]), FF.of(2, ["11"])
    phi = fm.separating_sentence(a, b)
    assert fm.rhd_tt(phi, a) and fm.rhd_tt(Not(phi), b)
    assert fm.separating_sentence(a, FF.of(2, ["01", "11"])) is None


def test_subset_sentence_cuts_out_subsets():
    fam = FF.of(3, ["000", "101", "111", "010"])
    for subset in [set(), {5}, {0, 2}, set(fam.members)]:
        phi = fm.subset_sentence(fam, subset)
        assert fm.neighborhood(fam, phi).members == subset
    with pytest.raises(ValueError):
        fm.subset_sentence(fam, {3})


def test_spectrum_and_closure():
    fam = FF.of(2, ["00", "01", "11"])
    assert fm.pt_spectrum(fam) == {1, 2, 3}
    sizes = {fm.rhd_pt_lambda(f.to_sentence(), fam) for f in enumerate_functions(2)} - {0}
    assert sizes == {1, 2, 3}
    assert fm.closure(fam) is fam


def test_all_families_counts():
    assert sum(1 for _ in fm.all_families(2)) == 16
    assert sum(1 for _ in fm.all_families(2, include_empty=False)) == 15


def test_intersection_and_union():
    a, b = FF.of(2, ["00", "01"]), FF.of(2, ["01", "11"])
    assert (a & b) == FF.of(2, ["01"])
    assert (a | b) == FF.of(2, ["00", "01", "11"])
    with pytest.raises(ValueError):
        a & FF.of(3, [])
