"""Explicit families of complete theories over ``Q0 .. Q{n-1}``.

A theory is stored as an int whose bit ``j`` is the truth value of ``Qj``.
Everything here is decided by exhaustive computation, which makes this
module the ground truth that the symbolic machinery is tested against.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import FamilySyntaxError, SupportOverflow
from .logic import (
    FALSE,
    BoolFn,
    Sentence,
    cube,
    disj,
    entails,
    support,
    truth_function,
)
from .ordinals import EMPTY_RD, RankDegree


@dataclass(frozen=True)
class FiniteFamily:
    atom_count: int
    members: frozenset

    def __post_init__(self):
        if self.atom_count < 0:
            raise ValueError("atom_count must be non-negative")
        limit = 1 << self.atom_count
        for m in self.members:
            if not 0 <= m < limit:
                raise ValueError(f"member {m} is not an assignment over {self.atom_count} atoms")

    @staticmethod
    def of(atom_count: int, members: Iterable) -> "FiniteFamily":
        """Build from ints or bitstrings (``Q0`` leftmost)."""
        out = set()
        for m in members:
            if isinstance(m, str):
                if len(m) != atom_count or set(m) - {"0", "1"}:
                    raise ValueError(f"bad bitstring {m!r} for {atom_count} atoms")
                m = sum(1 << j for j, ch in enumerate(m) if ch == "1")
            out.add(m)
        return FiniteFamily(atom_count, frozenset(out))

    @staticmethod
    def everything(atom_count: int) -> "FiniteFamily":
        return FiniteFamily(atom_count, frozenset(range(1 << atom_count)))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def bits(self, member: int) -> str:
        return "".join("1" if (member >> j) & 1 else "0" for j in range(self.atom_count))

    def assignment(self, member: int) -> dict:
        return {j: (member >> j) & 1 for j in range(self.atom_count)}

    def __str__(self):
        return format_finite_family(self)

    def __and__(self, other: "FiniteFamily") -> "FiniteFamily":
        _same_language(self, other)
        return FiniteFamily(self.atom_count, self.members & other.members)

    def __or__(self, other: "FiniteFamily") -> "FiniteFamily":
        _same_language(self, other)
        return FiniteFamily(self.atom_count, self.members | other.members)


def _same_language(a, b):
    if a.atom_count != b.atom_count:
        raise ValueError("families over different atom counts")


def format_finite_family(family: FiniteFamily) -> str:
    body = ", ".join(family.bits(m) for m in sorted(family.members, key=family.bits))
    return f"fin(n={family.atom_count}){{{body}}}"


_FIN = re.compile(r"\s*fin\s*\(\s*n\s*=\s*(\d+)\s*\)\s*\{([^}]*)\}\s*$")


def parse_finite_family(text: str) -> FiniteFamily:
    m = _FIN.match(text)
    if not m:
        raise FamilySyntaxError("expected fin(n=<k>){<bits>, ...}", text, 0)
    n = int(m.group(1))
    items = [s.strip() for s in m.group(2).split(",") if s.strip()]
    for item in items:
        if len(item) != n or set(item) - {"0", "1"}:
            raise FamilySyntaxError(f"bitstring {item!r} is not of length {n}", text, m.start(2))
    return FiniteFamily.of(n, items)


def _checked_function(phi: Sentence, family: FiniteFamily) -> BoolFn:
    sup = support(phi)
    if sup and max(sup) >= family.atom_count:
        raise SupportOverflow(
            f"sentence mentions Q{max(sup)} but the family has {family.atom_count} atoms"
        )
    return truth_function(phi)


def _models(phi: Sentence, family: FiniteFamily) -> frozenset:
    fn = _checked_function(phi, family)
    return frozenset(m for m in family.members if fn.value(family.assignment(m)))


def neighborhood(family: FiniteFamily, phi: Sentence) -> FiniteFamily:
    """The members of ``family`` in which ``phi`` holds."""
    return FiniteFamily(family.atom_count, _models(phi, family))


def rank_degree(family: FiniteFamily) -> RankDegree:
    if not family.members:
        return EMPTY_RD
    return RankDegree.of(0, len(family.members))


def rhd_pt(phi: Sentence, family: FiniteFamily) -> bool:
    return bool(_models(phi, family))


def rhd_tt(phi: Sentence, family: FiniteFamily) -> bool:
    return _models(phi, family) == family.members


def rhd_pt_lambda(phi: Sentence, family: FiniteFamily) -> int:
    """Number of members satisfying ``phi``."""
    return len(_models(phi, family))


def characteristic_sentence(family: FiniteFamily) -> Sentence:
    """Canonical complete DNF whose models (over the family's atoms) are the members."""
    table = 0
    for m in family.members:
        table |= 1 << m
    return BoolFn.make(tuple(range(family.atom_count)), table).to_sentence()


@dataclass(frozen=True)
class DeltaNabla:
    """Semantic form of the sentence sets of partial and total satisfaction.

    ``in_nabla(psi)`` holds iff some member satisfies ``psi``;
    ``in_delta(psi)`` iff every member does, i.e. iff ``delta_formula``
    entails ``psi``.
    """

    family: FiniteFamily
    delta_formula: Sentence

    @property
    def nabla_models(self) -> frozenset:
        return self.family.members

    def in_delta(self, psi: Sentence) -> bool:
        _checked_function(psi, self.family)
        return entails(self.delta_formula, psi)

    def in_nabla(self, psi: Sentence) -> bool:
        return bool(_models(psi, self.family))


def delta_nabla(family: FiniteFamily) -> DeltaNabla:
    return DeltaNabla(family, characteristic_sentence(family))


def separating_sentence(first: FiniteFamily, second: FiniteFamily) -> Optional[Sentence]:
    """A sentence true in all of ``first`` and false in all of ``second``.

    Finite families are closed, so such a sentence exists exactly when the
    families are disjoint; the characteristic DNF of ``first`` is returned.
    """
    _same_language(first, second)
    if first.members & second.members:
        return None
    return characteristic_sentence(first)


def pt_spectrum(family: FiniteFamily) -> frozenset:
    """Every size from 1 to ``|P|`` is cut out by the DNF of some subset."""
    return frozenset(range(1, len(family.members) + 1))


def is_generic(phi: Sentence, family: FiniteFamily) -> bool:
    return rank_degree(neighborhood(family, phi)) == rank_degree(family)


def is_p_complete(phi: Sentence, family: FiniteFamily) -> bool:
    return rhd_pt_lambda(phi, family) == 1


def closure(family: FiniteFamily) -> FiniteFamily:
    """Finite families have no accumulation points."""
    return family


def subset_sentence(family: FiniteFamily, subset: Iterable[int]) -> Sentence:
    """DNF defining exactly ``subset`` inside ``family``."""
    subset = frozenset(subset)
    if not subset <= family.members:
        raise ValueError("not a subset of the family")
    return disj(*(cube(family.assignment(m)) for m in sorted(subset))) if subset else FALSE


def all_families(atom_count: int, include_empty: bool = True):
    """Every subfamily of the full family over ``atom_count`` atoms."""
    size = 1 << atom_count
    for mask in range(0 if include_empty else 1, 1 << size):
        yield FiniteFamily(atom_count, frozenset(i for i in range(size) if (mask >> i) & 1))


def random_family(rng: random.Random, atom_count: Optional[int] = None) -> FiniteFamily:
    """Uniform over the nonempty subfamilies of 1..3 atoms."""
    n = atom_count if atom_count is not None else rng.choice((1, 2, 3))
    size = 1 << n
    mask = rng.randrange(1, 1 << size)
    return FiniteFamily(n, frozenset(i for i in range(size) if (mask >> i) & 1))
