"""Property suites behind ``ranklab verify``.

Each suite runs a family of checks and records, per check, how many cases
passed and failed.  Failing cases are kept as replayable command lines.
"""

from __future__ import annotations

import itertools
import random
import shlex
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import finite as fin_mod
from .logic import FALSE, And, Not, Sentence, disj, enumerate_functions, entails
from .logic import cube as cube_of
from .ordinals import OMEGA, RankDegree, degree_sum_at_max, format_ordinal
from .symbolic import (
    CONTINUUM,
    EMINIMAL,
    EMPTY,
    FULL,
    ZERO_POINT,
    Family,
    build_tower,
    cardinality,
    cb_rank,
    closure,
    cofactor,
    contains,
    count_generic,
    count_nongeneric,
    enumerate_points,
    fin,
    generic_theories,
    guard,
    in_closure,
    is_e_closed,
    is_generic_sentence,
    is_p_complete,
    isolated_points,
    isolating_sentence,
    least_generating_set,
    omegasum,
    pt_spectrum,
    rank_by_definition_oracle,
    rank_degree,
    ranking_sentence,
    restrict,
    rhd_pt,
    rhd_tt,
    separating_sentence,
    spectrum_rd,
    union,
)
from .symbolic.cardinals import ALEPH0, Cardinal
from .symbolic.corpus import bounded_corpus, random_family, random_point, random_sentence
from .symbolic.generic import ContinuumKernel
from .symbolic.nodes import cofactor_word
from .symbolic.spectra import SPECTRUM_SHAPES
from .symbolic.topology import accumulation_points

MAX_COUNTEREXAMPLES = 5


def replay(*args: str) -> str:
    return "ranklab " + shlex.join(str(a) for a in args)


@dataclass
class Check:
    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: List[str] = field(default_factory=list)

    def record(self, ok: bool, counterexample: Optional[Callable[[], str]] = None) -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if counterexample is not None and len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(counterexample())
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def as_json(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": list(self.counterexamples),
        }


@dataclass
class SuiteReport:
    suite: str
    seed: int
    budget: int
    atom_bound: int
    checks: Dict[str, Check] = field(default_factory=dict)

    def check(self, name: str) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name)
        return self.checks[name]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def lines(self) -> List[str]:
        out = []
        for c in self.checks.values():
            status = "PASS" if c.ok else "FAIL"
            out.append(f"{status} {c.name}: {c.passed} passed, {c.failed} failed")
            out.extend(f"    counterexample: {cx}" for cx in c.counterexamples)
        verdict = "all checks passed" if self.ok else "some checks failed"
        out.append(f"suite {self.suite} (seed {self.seed}, budget {self.budget}): {verdict}")
        return out

    def as_json(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "budget": self.budget,
            "atom_bound": self.atom_bound,
            "ok": self.ok,
            "checks": [c.as_json() for c in self.checks.values()],
        }


# ===================================================== finite families


class _FiniteTables:
    """Exhaustive relation tables for every family and sentence class over
    ``n`` atoms, filled in through the finite-family operations.

    Sentence classes are indexed by their truth table over all ``n`` atoms,
    so conjunction, disjunction and negation are bitwise operations on the
    indices.
    """

    def __init__(self, n: int):
        self.n = n
        self.mask = (1 << (1 << n)) - 1
        self.families = list(fin_mod.all_families(n))
        self.fns = list(enumerate_functions(n))
        self.sentences = [f.to_sentence() for f in self.fns]
        self.fam_index = {f.members: i for i, f in enumerate(self.families)}
        self.pt = [[fin_mod.rhd_pt(s, f) for s in self.sentences] for f in self.families]
        self.tt = [[fin_mod.rhd_tt(s, f) for s in self.sentences] for f in self.families]

    def neg(self, a: int) -> int:
        return self.mask & ~a

    def inter(self, i: int, j: int) -> int:
        return self.fam_index[self.families[i].members & self.families[j].members]

    def union(self, i: int, j: int) -> int:
        return self.fam_index[self.families[i].members | self.families[j].members]


def _ff(f) -> str:
    return fin_mod.format_finite_family(f)


def suite_satisfaction_laws(seed: int = 0, budget: int = 200, atom_bound: int = 2) -> SuiteReport:
    """Laws for partial/total satisfaction and the union/intersection operators."""
    report = SuiteReport("prop2", seed, budget, atom_bound)
    witnesses = {
        "pt of both conjuncts without pt of the conjunction": None,
        "tt of a conjunction on an intersection without tt of either part": None,
        "pt of a disjunction without pt of both disjuncts": None,
        "tt of a disjunction with neither disjunct tt": None,
    }
    for n in range(0, 3):
        t = _FiniteTables(n)
        F, S = range(len(t.families)), range(len(t.fns))
        c23_1 = report.check("pt of a conjunction on an intersection gives pt of each part")
        c23_2 = report.check("tt of a conjunction iff tt of both conjuncts")
        c23_3 = report.check("tt of both parts gives tt of the conjunction on the intersection")
        c24_1 = report.check("pt of either part gives pt of the disjunction on the union")
        c24_2 = report.check("pt of a disjunction iff pt of some disjunct")
        c24_3 = report.check("tt of both parts gives tt of the disjunction on the union")
        duality = report.check("pt and tt are dual under negation")
        for p, q in itertools.product(F, F):
            pq, p_or_q = t.inter(p, q), t.union(p, q)
            for a, b in itertools.product(S, S):
                ab, a_or_b = a & b, a | b

                def cx(rel, fam=p):
                    return lambda: replay("check", rel, _ff(t.families[fam]), str(t.sentences[ab]))

                if t.pt[pq][ab]:
                    c23_1.record(t.pt[p][a] and t.pt[q][b], cx("pt", pq))
                if p == q:
                    c23_2.record(t.tt[p][ab] == (t.tt[p][a] and t.tt[p][b]), cx("tt"))
                    c24_2.record(t.pt[p][a_or_b] == (t.pt[p][a] or t.pt[p][b]), cx("pt"))
                    if t.pt[p][a] and t.pt[p][b] and not t.pt[p][ab]:
                        witnesses["pt of both conjuncts without pt of the conjunction"] = (t.families[p], t.sentences[a], t.sentences[b])
                    if t.pt[p][a_or_b] and not (t.pt[p][a] and t.pt[p][b]):
                        witnesses["pt of a disjunction without pt of both disjuncts"] = (t.families[p], t.sentences[a], t.sentences[b])
                    if t.tt[p][a_or_b] and not t.tt[p][a] and not t.tt[p][b]:
                        witnesses["tt of a disjunction with neither disjunct tt"] = (t.families[p], t.sentences[a], t.sentences[b])
                if t.tt[p][a] and t.tt[q][b]:
                    c23_3.record(t.tt[pq][ab], cx("tt", pq))
                    c24_3.record(t.tt[p_or_q][a_or_b], cx("tt", p_or_q))
                if t.pt[p][a] or t.pt[q][b]:
                    c24_1.record(t.pt[p_or_q][a_or_b], cx("pt", p_or_q))
                if t.tt[pq][ab] and not t.tt[p][a] and not t.tt[q][b]:
                    witnesses["tt of a conjunction on an intersection without tt of either part"] = (
                        (t.families[p], t.families[q]), t.sentences[a], t.sentences[b])
        for p in F:
            fam = t.families[p]
            for a in S:
                duality.record(
                    t.pt[p][a] == (not t.tt[p][t.neg(a)]) and t.tt[p][a] == (not t.pt[p][t.neg(a)]),
                    lambda: replay("check", "pt", _ff(fam), str(t.sentences[a])),
                )
        _delta_nabla_laws(report, t)
        _split_and_separate(report, t)
    for name, w in witnesses.items():
        report.check(f"witness: {name}").record(w is not None)
    _laws_on_random_families(report, seed, budget)
    return report


def _models_of(t: _FiniteTables, ids) -> int:
    """Assignments (as a bitmask) satisfying every sentence in ``ids``."""
    mask = t.mask
    for i in ids:
        mask &= i
    return mask


def _delta_nabla_laws(report: SuiteReport, t: _FiniteTables):
    c1 = report.check("nabla is the union of the member theories")
    c2 = report.check("nabla consistent iff at most one member, complete iff one")
    c3 = report.check("delta is the intersection of the member theories")
    c4 = report.check("delta consistent iff nonempty, complete iff one member")
    c5 = report.check("delta inside nabla, equal iff one member")
    S = range(len(t.fns))
    for p, fam in enumerate(t.families):
        dn = fin_mod.delta_nabla(fam)
        nabla = [i for i in S if dn.in_nabla(t.sentences[i])]
        delta = [i for i in S if dn.in_delta(t.sentences[i])]
        members = sorted(fam.members)
        union_of_theories = [i for i in S if any(t.fns[i].value(fam.assignment(m)) for m in members)]
        inter_of_theories = [i for i in S if all(t.fns[i].value(fam.assignment(m)) for m in members)]
        cx = lambda: replay("delta-nabla", _ff(fam))  # noqa: E731
        c1.record(nabla == union_of_theories, cx)
        c3.record(delta == inter_of_theories, cx)
        size = len(members)
        nabla_consistent = _models_of(t, nabla) != 0
        nabla_complete = nabla_consistent and all(i in nabla or t.neg(i) in nabla for i in S)
        c2.record(nabla_consistent == (size <= 1) and nabla_complete == (size == 1), cx)
        delta_consistent = _models_of(t, delta) != 0
        delta_complete = delta_consistent and all(i in delta or t.neg(i) in delta for i in S)
        c4.record(delta_consistent == (size >= 1) and delta_complete == (size == 1), cx)
        if size >= 1:
            c5.record(set(delta) <= set(nabla) and (set(delta) == set(nabla)) == (size == 1), cx)


def _split_and_separate(report: SuiteReport, t: _FiniteTables):
    c1 = report.check("a sentence pt-splits two families iff both nonempty with two members overall")
    c2 = report.check("finite families are tt-separable iff disjoint")
    cf = report.check("delta is a proper filter")
    cp = report.check("delta is generated by the characteristic sentence")
    cu = report.check("delta is an ultrafilter iff one member")
    S = range(len(t.fns))
    for p, q in itertools.product(range(len(t.families)), repeat=2):
        P1, P2 = t.families[p], t.families[q]
        exists_pt = any(t.pt[p][a] and t.pt[q][t.neg(a)] for a in S)
        c1.record(exists_pt == (len(P1) > 0 and len(P2) > 0 and len(P1 | P2) >= 2),
                  lambda: replay("separate", _ff(P1), _ff(P2)))
        exists_tt = any(t.tt[p][a] and t.tt[q][t.neg(a)] for a in S)
        c2.record(exists_tt == (not (P1.members & P2.members)),
                  lambda: replay("separate", _ff(P1), _ff(P2)))
    for p, fam in enumerate(t.families):
        if not fam.members:
            continue
        dn = fin_mod.delta_nabla(fam)
        delta = {a for a in S if t.tt[p][a]}
        upward = all(b in delta for a in delta for b in S if entails(t.sentences[a], t.sentences[b]))
        meets = all(a & b in delta for a in delta for b in delta)
        cf.record(upward and meets and 0 not in delta,
                  lambda: replay("delta-nabla", _ff(fam)))
        gen = dn.delta_formula
        cp.record(all((a in delta) == entails(gen, t.sentences[a]) for a in S),
                  lambda: replay("delta-nabla", _ff(fam)))
        ultra = all(a in delta or t.neg(a) in delta for a in S)
        cu.record(ultra == (len(fam) == 1), lambda: replay("delta-nabla", _ff(fam)))


def _laws_on_random_families(report: SuiteReport, seed: int, budget: int):
    """The same laws on random families over three atoms."""
    rng = random.Random(seed)
    check = report.check("conjunction/disjunction laws on random 3-atom families")
    t = _FiniteTables(3) if budget else None
    if t is None:
        return
    for _ in range(budget):
        p = rng.randrange(len(t.families))
        q = rng.randrange(len(t.families))
        a = rng.randrange(len(t.fns))
        b = rng.randrange(len(t.fns))
        pq, ab, a_or_b = t.inter(p, q), a & b, a | b
        ok = True
        if t.pt[pq][ab]:
            ok &= t.pt[p][a] and t.pt[q][b]
        ok &= t.tt[p][ab] == (t.tt[p][a] and t.tt[p][b])
        if t.tt[p][a] and t.tt[q][b]:
            ok &= t.tt[pq][ab] and t.tt[t.union(p, q)][a_or_b]
        ok &= t.pt[p][a_or_b] == (t.pt[p][a] or t.pt[p][b])
        ok &= t.pt[p][a] == (not t.tt[p][t.neg(a)])
        check.record(ok, lambda: replay("check", "pt", _ff(t.families[p]), str(t.sentences[a])))


# ===================================================== symbolic helpers


def _sentences(m: int):
    """Reduced functions of every sentence class over ``Q0 .. Q{m-1}``."""
    return list(enumerate_functions(m))


def _rd_le(a: RankDegree, b: RankDegree) -> bool:
    if a.rank != b.rank:
        return a.rank < b.rank
    return a.degree is None or a.degree <= b.degree


def _random_families(rng: random.Random, count: int, allow_limits: bool = True) -> List[Family]:
    return [random_family(rng, 3, allow_limits) for _ in range(count)]


def _tower_cases():
    alphas = [0, 1, 2, 3, OMEGA, OMEGA + 1, OMEGA + OMEGA]
    return [(a, n) for a in alphas for n in (1, 2, 3)]


# ========================================================== thm3-4 suite


def suite_rank_additivity(seed: int = 0, budget: int = 200, atom_bound: int = 2) -> SuiteReport:
    """Additivity of rank/degree over a sentence and its negation, monotony,
    the rank characterization of satisfaction, towers and ranking sentences."""
    report = SuiteReport("thm3-4", seed, budget, atom_bound)
    rng = random.Random(seed)
    fns = _sentences(atom_bound)
    families = bounded_corpus() + _random_families(rng, budget)
    add = report.check("rank/degree of a family from a sentence and its negation")
    top = report.check("complement of a top restriction has lower rank")
    mono = report.check("monotony of restriction")
    for F in families:
        rd = rank_degree(F)
        for fn in fns:
            a, b = restrict(F, fn), restrict(F, fn.negate())
            ra, rb = rank_degree(a), rank_degree(b)
            cx = lambda: replay("restrict", str(F), str(fn.to_sentence()))  # noqa: E731
            add.record(degree_sum_at_max([ra, rb]) == rd, cx)
            mono.record(_rd_le(ra, rd), cx)
            if rd.rank.is_ordinal and ra == rd:
                top.record(b is EMPTY or rb.rank < rd.rank, cx)
    # finite families: satisfaction via rank, and degree as a count
    sat_by_rank = report.check("tt iff the negation's restriction is empty, pt iff nonempty")
    deg = report.check("degree of a finite family splits over a sentence")
    for n in range(0, 3):
        t = _FiniteTables(n)
        for fam in t.families:
            for s in t.sentences:
                cx = lambda: replay("check", "tt", _ff(fam), str(s))  # noqa: E731
                r_pos = fin_mod.rank_degree(fin_mod.neighborhood(fam, s))
                r_neg = fin_mod.rank_degree(fin_mod.neighborhood(fam, Not(s)))
                sat_by_rank.record(
                    fin_mod.rhd_tt(s, fam) == r_neg.rank.is_minus_one
                    and fin_mod.rhd_pt(s, fam) == (not r_pos.rank.is_minus_one),
                    cx,
                )
                if fam.members:
                    deg.record(
                        len(fam) == fin_mod.rhd_pt_lambda(s, fam) + fin_mod.rhd_pt_lambda(Not(s), fam),
                        cx,
                    )
    # towers realize every (alpha, n)
    tw = report.check("towers: rank/degree and spectrum")
    for alpha, n in _tower_cases():
        T = build_tower(alpha, n)
        spec = spectrum_rd(T)
        tw.record(
            rank_degree(T) == RankDegree.of(alpha, n)
            and spec.kind == "segment" and spec.beta == alpha and spec.n == n,
            lambda: replay("tower", format_ordinal(alpha), str(n)),
        )
    # ranking sentences
    rk = report.check("ranking sentences")
    for F in families[: 200 + budget]:
        rd = rank_degree(F)
        spec = spectrum_rd(F)
        targets = [-1, 0, 1, 2, 3]
        for alpha in targets:
            phi = ranking_sentence(F, alpha)
            cx = lambda: replay("restrict", str(F), str(phi))  # noqa: E731
            if alpha == -1:
                rk.record(phi == FALSE, cx)
                continue
            if spec.admits_rank(alpha):
                rk.record(phi is not None and rank_degree(restrict(F, phi)).rank == alpha, cx)
            else:
                rk.record(phi is None, cx)
            if rd.rank.is_ordinal and rd.rank.ordinal < alpha:
                rk.record(phi is None, cx)
    return report


# ========================================================= spectra suite


def suite_spectra(seed: int = 0, budget: int = 200, atom_bound: int = 2) -> SuiteReport:
    report = SuiteReport("spectra", seed, budget, atom_bound)
    rng = random.Random(seed)
    ex = report.check("spectrum examples")
    ex.record(str(spectrum_rd(FULL)) == "{∞}")
    ex.record(spectrum_rd(FULL).kind == "infinity")
    u = spectrum_rd(union(FULL, build_tower(1, 2)))
    ex.record(u.kind == "segment+infinity" and u.beta == 1 and u.n == 2)
    for alpha, n in _tower_cases():
        s = spectrum_rd(build_tower(alpha, n))
        ex.record(s.kind == "segment" and s.beta == alpha and s.n == n,
                  lambda: replay("spectrum-rd", f"tower({format_ordinal(alpha)},{n})"))
        s = spectrum_rd(union(FULL, build_tower(alpha, n)))
        ex.record(s.kind == "segment+infinity" and s.beta == alpha and s.n == n,
                  lambda: replay("spectrum-rd", f"union(full, tower({format_ordinal(alpha)},{n}))"))
    shape = report.check("spectrum shape is one of three")
    sound = report.check("restriction ranks lie in the spectrum")
    realized = report.check("top of a segment is realized")
    fns = _sentences(atom_bound)
    families = bounded_corpus() + _random_families(rng, budget)
    for F in families:
        spec = spectrum_rd(F)
        if F is EMPTY:
            shape.record(spec.kind == "empty")
            continue
        shape.record(spec.kind in SPECTRUM_SHAPES, lambda: replay("spectrum-rd", str(F)))
        for fn in fns:
            R = restrict(F, fn)
            if R is EMPTY:
                continue
            rd = rank_degree(R)
            sound.record(spec.contains(rd),
                         lambda: replay("spectrum-rd", str(F)) + f"  # restriction by {fn.to_sentence()} has {rd}")
        if spec.kind == "segment+infinity" and spec.n >= 1:
            phi = ranking_sentence(F, spec.beta)
            realized.record(phi is not None and spec.contains(rank_degree(restrict(F, phi))),
                            lambda: replay("spectrum-rd", str(F)))
        if spec.kind == "segment":
            realized.record(rank_degree(F) == RankDegree.of(spec.beta, spec.n))
    return report


# ====================================================== pt-spectra suite


def _definable_sizes(F: Family, fns) -> set:
    return {cardinality(restrict(F, fn)) for fn in fns}


def suite_pt_spectra(seed: int = 0, budget: int = 200, atom_bound: int = 3) -> SuiteReport:
    report = SuiteReport("pt-spectra", seed, budget, atom_bound)
    rng = random.Random(seed)
    all_sizes = report.check("finite families of up to 8 members realize sizes 1..|P|")
    three = [f.to_sentence() for f in enumerate_functions(3)]
    for fam in fin_mod.all_families(3):
        expected = frozenset(range(1, len(fam) + 1))
        sizes = {fin_mod.rhd_pt_lambda(s, fam) for s in three} - {0}
        all_sizes.record(fin_mod.pt_spectrum(fam) == expected and sizes == expected,
                   lambda: replay("spectrum-pt", _ff(fam)))
        sym = pt_spectrum(fin(_points_of(fam)))
        all_sizes.record(sym.finite_bound == len(fam) and not sym.infinite_part,
                   lambda: replay("spectrum-pt", _ff(fam)))
    ex = report.check("cardinality spectrum examples")
    s = pt_spectrum(closure(EMINIMAL))
    ex.record(s.finite_bound is None and s.infinite_part == frozenset([ALEPH0]))
    s = pt_spectrum(FULL)
    ex.record(s.finite_bound == 0 and s.infinite_part == frozenset([CONTINUUM]))
    seg = report.check("finite definable sizes form an initial segment")
    sound = report.check("definable sizes lie in the cardinality spectrum")
    isolated_sizes = report.check("n isolated points give exactly the sizes 1..n")
    rank1_infinite = report.check("rank 1 families have at most degree-many infinite sizes")
    fns = _sentences(atom_bound)
    families = bounded_corpus(3) + _random_families(rng, budget)
    for F in families:
        spec = pt_spectrum(F)
        sizes = _definable_sizes(F, fns) - {Cardinal.finite(0)}
        for size in sizes:
            sound.record(spec.contains(size), lambda: replay("spectrum-pt", str(F)) + f"  # size {size}")
        finite_sizes = sorted(c.n for c in sizes if c.is_finite)
        if finite_sizes:
            upto = finite_sizes[-1]
            seg.record(all(_realize_size(F, k) for k in range(1, upto + 1)),
                       lambda: replay("spectrum-pt", str(F)))
        if spec.finite_bound is not None and spec.finite_bound <= 12:
            n = spec.finite_bound
            ok = all(_realize_size(F, k) for k in range(1, n + 1))
            ok &= cardinality(isolated_points(F)) == n
            isolated_sizes.record(ok, lambda: replay("spectrum-pt", str(F)))
        rd = rank_degree(F)
        if rd.rank == 1:
            rank1_infinite.record(len(spec.infinite_part) <= rd.degree and spec.infinite_part <= {ALEPH0},
                       lambda: replay("spectrum-pt", str(F)))
    return report


def _points_of(fam) -> list:
    from .symbolic.points import PointTheory

    return [PointTheory.from_values(fam.assignment(m)) for m in fam.members]


def _realize_size(F: Family, k: int) -> bool:
    """Exhibit a sentence cutting out exactly ``k`` points, from isolating cubes."""
    iso = isolated_points(F)
    pts = list(itertools.islice(enumerate_points(iso), k))
    if len(pts) < k:
        return False
    cubes = [isolating_sentence(F, p) for p in pts]
    if any(c is None for c in cubes):
        return False
    phi = disj(*cubes) if cubes else FALSE
    return cardinality(restrict(F, phi)) == k


# ========================================================= generic suite


def suite_generic(seed: int = 0, budget: int = 200, atom_bound: int = 2) -> SuiteReport:
    report = SuiteReport("generic", seed, budget, atom_bound)
    rng = random.Random(seed)
    finite_generic = report.check("finite families: generic iff totally satisfied")
    for n in range(0, 4):
        sents = [f.to_sentence() for f in enumerate_functions(n)]
        for fam in fin_mod.all_families(n):
            for s in sents:
                finite_generic.record(fin_mod.is_generic(s, fam) == fin_mod.rhd_tt(s, fam),
                           lambda: replay("check", "generic", _ff(fam), str(s)))
    tower_generics = report.check("towers have degree-many generic theories of top CB rank")
    for alpha, n in _tower_cases():
        T = build_tower(alpha, n)
        gens = generic_theories(T)
        target = rank_degree(T).rank
        ok = isinstance(gens, list) and len(gens) == n and len(set(gens)) == n
        ok = ok and all(cb_rank(T, p) == target for p in gens)
        ok = ok and count_generic(T) == n
        tower_generics.record(ok, lambda: replay("generic-theories", f"tower({format_ordinal(alpha)},{n})"))
    fns = _sentences(atom_bound)
    corpus = bounded_corpus() + _random_families(rng, budget)
    split_generic = report.check("ordinal rank: a sentence, its negation, or a degree split is generic")
    rank_oo_split = report.check("rank oo: a sentence or its negation keeps rank oo")
    generic_by_rank = report.check("generic iff the restriction keeps the oracle rank")
    tt_generic = report.check("total satisfaction implies generic")
    t513 = report.check("generic counts, CB ranks and the nongeneric dichotomy")
    for F in corpus:
        rd = rank_degree(F)
        if rd.rank.is_minus_one:
            continue
        for fn in fns:
            phi, neg = fn.to_sentence(), fn.negate().to_sentence()
            g1, g2 = is_generic_sentence(phi, F), is_generic_sentence(neg, F)
            cx = lambda: replay("check", "generic", str(F), str(phi))  # noqa: E731
            if rd.rank.is_ordinal:
                if rd.degree == 1:
                    split_generic.record(g1 != g2, cx)
                elif not g1 and not g2:
                    ra, rb = rank_degree(restrict(F, phi)), rank_degree(restrict(F, neg))
                    split_generic.record(ra.rank == rd.rank == rb.rank and ra.degree + rb.degree == rd.degree, cx)
                else:
                    split_generic.record(True)
            else:
                rank_oo_split.record(g1 or g2, cx)
            if rhd_tt(phi, F):
                tt_generic.record(g1, cx)
        t513.record(_nongeneric_counts(F), lambda: replay("generic-theories", str(F)))
    for F in bounded_corpus(3):
        if rank_degree(F).rank.is_ordinal:
            for fn in fns[:16]:
                phi = fn.to_sentence()
                R = restrict(F, phi)
                expected = rank_by_definition_oracle(R, 1) == rank_by_definition_oracle(F, 1)
                generic_by_rank.record(is_generic_sentence(phi, F) == expected,
                           lambda: replay("check", "generic", str(F), str(phi)))
    # rank oo families: Full glued to random material
    for _ in range(max(200, budget)):
        F = union(FULL, random_family(rng, 2)) if rng.random() < 0.5 else union(random_family(rng, 2), FULL)
        phi = random_sentence(rng, 5, rng.randint(1, 5))
        a, b = rank_degree(restrict(F, phi)).rank, rank_degree(restrict(F, Not(phi))).rank
        rank_oo_split.record(a.is_infinity or b.is_infinity, lambda: replay("restrict", str(F), str(phi)))
        rank_oo_split.record(is_generic_sentence(phi, F) or is_generic_sentence(Not(phi), F),
                    lambda: replay("check", "generic", str(F), str(phi)))
    isolated_generic = report.check("isolated theories are generic iff the family is finite")
    for F in (build_tower(0, 3), fin([ZERO_POINT]), closure(EMINIMAL), build_tower(2, 1),
              union(build_tower(1, 2), build_tower(0, 2)), union(FULL, build_tower(0, 2))):
        finite = cardinality(F).is_finite
        gens = generic_theories(F)
        for p in itertools.islice(enumerate_points(isolated_points(F)), 6):
            phi = isolating_sentence(F, p)
            ok = phi is not None and is_p_complete(phi, F)
            is_gen = isinstance(gens, list) and p in gens
            isolated_generic.record(ok and is_gen == finite, lambda: replay("generic-theories", str(F)))
    least_generic = report.check("a least generic restriction exists iff the family is finite")
    for F in corpus[:300]:
        least_generic.record(_least_generic_restriction(F, fns), lambda: replay("generic-theories", str(F)))
    return report


def _nongeneric_counts(F: Family) -> bool:
    rd = rank_degree(F)
    if rd.rank.is_ordinal:
        gens = generic_theories(F)
        closed = closure(F)
        return count_generic(F) == rd.degree and all(cb_rank(closed, p) == rd.rank for p in gens)
    if count_generic(F) != CONTINUUM or not isinstance(generic_theories(F), ContinuumKernel):
        return False
    spec = spectrum_rd(F)
    non = count_nongeneric(F)
    if spec.kind == "infinity":
        return non == 0
    if spec.beta >= 1:
        return not non.is_finite
    return non >= spec.n and non >= 1


def _least_generic_restriction(F: Family, fns) -> bool:
    """Some generic restriction is least among generic ones iff F is finite."""
    if F is EMPTY:
        return True
    generic = [fn for fn in fns if is_generic_sentence(fn.to_sentence(), F)]
    if cardinality(F).is_finite:
        # every generic sentence holds throughout F, so F itself is least
        return all(restrict(F, fn) == F for fn in generic)
    # otherwise each generic restriction has a strictly smaller generic one
    for fn in generic:
        R = restrict(F, fn)
        smaller = _shrink_generic(R)
        if smaller is None:
            return False
        phi = And(fn.to_sentence(), smaller)
        if not is_generic_sentence(phi, F) or restrict(R, Not(smaller)) is EMPTY:
            return False
    return True


def _shrink_generic(R: Family) -> Optional[Sentence]:
    """A sentence keeping the rank and degree of infinite ``R`` while dropping some point."""
    iso = isolated_points(R)
    if iso is not EMPTY:
        cube = isolating_sentence(R, next(enumerate_points(iso)))
        return None if cube is None else Not(cube)
    # perfect: descend until one half keeps rank oo and the other is nonempty
    bits: List[int] = []
    node = R
    for _ in range(64):
        halves = {b: cofactor(node, b) for b in (0, 1)}
        keep = 1 if rank_degree(halves[1]).rank.is_infinity else 0
        bits.append(keep)
        if halves[1 - keep] is not EMPTY:
            return cube_of(dict(enumerate(bits)))
        node = halves[keep]
    return None


# ========================================================= closure suite


def suite_closure(seed: int = 0, budget: int = 500, atom_bound: int = 2) -> SuiteReport:
    report = SuiteReport("closure", seed, budget, atom_bound)
    rng = random.Random(seed)
    inv = report.check("pt and tt unchanged by closure")
    idem = report.check("closure is idempotent and e-closed")
    memb = report.check("closure membership matches the prefix-cell test")
    acc = report.check("accumulation points have infinite prefix cells")
    cb = report.check("CB rank examples")
    for _ in range(max(500, budget)):
        F = random_family(rng, 3)
        C = closure(F)
        phi = random_sentence(rng, 5, rng.randint(1, 6))
        inv.record(rhd_pt(phi, F) == rhd_pt(phi, C) and rhd_tt(phi, F) == rhd_tt(phi, C),
                   lambda: replay("check", "tt", str(F), str(phi)))
        idem.record(closure(C) == C and is_e_closed(C), lambda: replay("closure", str(F)))
        for _ in range(3):
            p = random_point(rng, 6)
            memb.record(in_closure(F, p) == _prefix_cells_meet(F, p, p.span + 8)
                        and contains(C, p) == in_closure(F, p),
                        lambda: replay("closure", str(F)) + f"  # point {p}")
        report_acc = accumulation_points(F, sample=4)
        for p in report_acc.points:
            acc.record(in_closure(F, p) and _prefix_cells_infinite(F, p, p.span + 6),
                       lambda: replay("closure", str(F)) + f"  # point {p}")
        for p in itertools.islice(enumerate_points(isolated_points(F)), 2) if cardinality(F) != CONTINUUM else ():
            acc.record(isolating_sentence(F, p) is not None)
    E = closure(EMINIMAL)
    cb.record(cb_rank(E, ZERO_POINT) == 1)
    cb.record(all(cb_rank(E, p) == 0 for p in itertools.islice(enumerate_points(EMINIMAL), 5)))
    cb.record(cb_rank(closure(omegasum(EMINIMAL)), ZERO_POINT) == 2)
    cb.record(cb_rank(FULL, ZERO_POINT).is_infinity)
    sep = report.check("separation by sentences")
    evens = omegasum(fin([ZERO_POINT]), 2, 0)
    odds = omegasum(fin([ZERO_POINT]), 2, 1)
    sep.record(separating_sentence(evens, odds) is None, lambda: replay("separate", str(evens), str(odds)))
    fns = _sentences(atom_bound)
    for _ in range(budget):
        A, B = random_family(rng, 2), random_family(rng, 2)
        if rng.random() < 0.5:
            A, B = guard({0: 1}, A), guard({0: 0}, B)
        phi = separating_sentence(A, B)
        cx = lambda: replay("separate", str(A), str(B))  # noqa: E731
        if phi is not None:
            sep.record(rhd_tt(phi, A) and rhd_tt(Not(phi), B), cx)
        else:
            # inseparable: no sentence at the atom bound separates them either
            sep.record(not any(rhd_tt(f.to_sentence(), A) and rhd_tt(f.negate().to_sentence(), B) for f in fns), cx)
    lg = report.check("least generating sets")
    r = least_generating_set(FULL)
    lg.record(r is None)
    for F in (closure(EMINIMAL), build_tower(0, 3), closure(build_tower(2, 2)), closure(build_tower(OMEGA, 1)),
              closure(union(EMINIMAL, omegasum(EMINIMAL, 2, 1)))):
        gen = least_generating_set(F)
        ok = gen is not None and closure(gen.family) == F
        for p in gen.listed if gen else ():
            phi = isolating_sentence(F, p)
            ok = ok and phi is not None and is_p_complete(phi, F)
        lg.record(ok, lambda: replay("least-gen", str(F)))
    return report


def _prefix_cells_meet(F: Family, p, depth: int) -> bool:
    node = F
    for i in range(depth):
        if node is EMPTY:
            return False
        node = cofactor(node, p.value(i))
    return node is not EMPTY


def _prefix_cells_infinite(F: Family, p, depth: int) -> bool:
    return all(not cardinality(cofactor_word(F, [p.value(i) for i in range(d)])).is_finite for d in range(depth))


# ================================================ oracle agreement suite


def suite_oracle(seed: int = 0, budget: int = 200, atom_bound: int = 3) -> SuiteReport:
    report = SuiteReport("oracle-agreement", seed, budget, atom_bound)
    rng = random.Random(seed)
    check = report.check("structural rank equals the definition oracle")
    for F in bounded_corpus():
        for m in range(1, atom_bound + 1):
            check.record(rank_by_definition_oracle(F, m) == rank_degree(F),
                         lambda: replay("rank", str(F), "--oracle", "--atom-bound", str(m)))
    rand = report.check("random families")
    for _ in range(budget):
        F = random_family(rng, 3, allow_limits=False)
        m = rng.randint(1, atom_bound)
        rand.record(rank_by_definition_oracle(F, m) == rank_degree(F),
                    lambda: replay("rank", str(F), "--oracle", "--atom-bound", str(m)))
    return report


SUITES = {
    "prop2": suite_satisfaction_laws,
    "thm3-4": suite_rank_additivity,
    "spectra": suite_spectra,
    "pt-spectra": suite_pt_spectra,
    "generic": suite_generic,
    "closure": suite_closure,
    "oracle-agreement": suite_oracle,
}


def run_suite(name: str, seed: int = 0, budget: Optional[int] = None, atom_bound: Optional[int] = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    kwargs = {"seed": seed}
    if budget is not None:
        kwargs["budget"] = budget
    if atom_bound is not None:
        kwargs["atom_bound"] = atom_bound
    return SUITES[name](**kwargs)
