"""Ordinals below epsilon_0 in Cantor normal form, and rank/degree values."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Optional, Union

from .errors import OrdinalSyntaxError


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """``w^e1*c1 + ... + w^ek*ck`` with ``e1 > ... > ek`` and ``ci >= 1``.

    ``terms`` holds ``(exponent, coefficient)`` pairs; exponents are
    themselves ordinals, so towers such as ``w^w^w`` are representable.
    """

    terms: tuple = ()

    def __post_init__(self):
        prev = None
        for exp, coeff in self.terms:
            if not isinstance(exp, Ordinal) or not isinstance(coeff, int) or coeff < 1:
                raise ValueError(f"malformed CNF term ({exp!r}, {coeff!r})")
            if prev is not None and compare(prev, exp) <= 0:
                raise ValueError("CNF exponents must be strictly decreasing")
            prev = exp

    @staticmethod
    def of(value: Union[int, "Ordinal"]) -> "Ordinal":
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ValueError(f"not a natural number: {value!r}")
        return Ordinal(((ZERO, value),)) if value else ZERO

    @staticmethod
    def omega_power(exponent: Union[int, "Ordinal"], coeff: int = 1) -> "Ordinal":
        return Ordinal(((Ordinal.of(exponent), coeff),))

    # -- classification

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(exp.is_zero for exp, _ in self.terms)

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    def __int__(self):
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def predecessor(self) -> "Ordinal":
        if not self.is_successor:
            raise ValueError(f"{self} is not a successor ordinal")
        exp, coeff = self.terms[-1]
        head = self.terms[:-1]
        return Ordinal(head + (((exp, coeff - 1),) if coeff > 1 else ()))

    def fundamental(self, i: int) -> "Ordinal":
        """The ``i``-th element of the canonical sequence converging to a limit.

        With last term ``w^e*c`` and ``g`` the ordinal with that term
        lowered to ``w^e*(c-1)``, element ``i`` is ``g + w^e'*i`` where
        ``e'`` is the predecessor of ``e`` (successor case) or ``e[i]``
        (limit case).  The sequence is strictly increasing from ``i = 1``
        and its supremum is ``self``.
        """
        if not self.is_limit:
            raise ValueError(f"{self} is not a limit ordinal")
        exp, coeff = self.terms[-1]
        base = Ordinal(self.terms[:-1] + (((exp, coeff - 1),) if coeff > 1 else ()))
        step = exp.predecessor() if exp.is_successor else exp.fundamental(i)
        if i == 0:
            return base
        return add(base, Ordinal.omega_power(step, i))

    # -- ordering against ordinals and plain ints

    def __lt__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self.terms == Ordinal.of(other).terms
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self.is_finite:
            return hash(int(self))
        return hash(self.terms)

    def __add__(self, other):
        return add(self, Ordinal.of(other))

    def __radd__(self, other):
        return add(Ordinal.of(other), self)

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def compare(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) == len(b.terms):
        return 0
    return -1 if len(a.terms) < len(b.terms) else 1


def succ(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def omax(a: Ordinal, b: Ordinal) -> Ordinal:
    return a if compare(a, b) >= 0 else b


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum; terms of ``a`` below the leading exponent of ``b`` vanish."""
    if b.is_zero:
        return a
    lead_exp, lead_coeff = b.terms[0]
    kept = []
    for exp, coeff in a.terms:
        c = compare(exp, lead_exp)
        if c > 0:
            kept.append((exp, coeff))
        elif c == 0:
            lead_coeff += coeff
            break
        else:
            break
    return Ordinal(tuple(kept) + ((lead_exp, lead_coeff),) + b.terms[1:])


# ---------------------------------------------------------------- text form


def format_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp.is_zero:
            parts.append(str(coeff))
            continue
        if exp == ONE:
            s = "w"
        else:
            inner = format_ordinal(exp)
            simple = inner.isdigit() or inner == "w" or (
                len(exp.terms) == 1 and exp.terms[0][1] == 1 and "+" not in inner and "*" not in inner
            )
            s = f"w^{inner}" if simple else f"w^({inner})"
        parts.append(s if coeff == 1 else f"{s}*{coeff}")
    return "+".join(parts)


_ORD_TOKEN = re.compile(r"\s*(\d+|[w+*^()])")


def parse_ordinal(text: str) -> Ordinal:
    """Parse ``0``, ``5``, ``w``, ``w+3``, ``w^2*4+w*2+1``, ``w^w``, ``w^(w+1)``."""
    tokens = []
    pos = 0
    text_stripped = text.rstrip()
    while pos < len(text_stripped):
        m = _ORD_TOKEN.match(text_stripped, pos)
        if not m:
            raise OrdinalSyntaxError(f"bad ordinal {text!r} at position {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise OrdinalSyntaxError("empty ordinal")
    state = {"i": 0}

    def peek():
        return tokens[state["i"]] if state["i"] < len(tokens) else None

    def take(expected=None):
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise OrdinalSyntaxError(f"bad ordinal {text!r}: expected {expected or 'more input'}")
        state["i"] += 1
        return tok

    def total():
        value = term()
        while peek() == "+":
            take("+")
            value = add(value, term())
        return value

    def power():
        # w [^ exponent]; the exponent binds tighter than '*'
        take("w")
        if peek() == "^":
            take("^")
            tok = peek()
            if tok == "(":
                take("(")
                exp = total()
                take(")")
            elif tok == "w":
                exp = power()
            elif tok is not None and tok.isdigit():
                exp = Ordinal.of(int(take()))
            else:
                raise OrdinalSyntaxError(f"bad exponent in {text!r}")
            return Ordinal.omega_power(exp)
        return OMEGA

    def term():
        tok = peek()
        if tok is not None and tok.isdigit():
            return Ordinal.of(int(take()))
        if tok == "(":
            take("(")
            value = total()
            take(")")
            return value
        base = power()
        if peek() == "*":
            take("*")
            coeff = int(take())
            if coeff == 0:
                return ZERO
            exp = base.terms[0][0]
            return Ordinal.omega_power(exp, coeff)
        return base

    value = total()
    if peek() is not None:
        raise OrdinalSyntaxError(f"trailing input in ordinal {text!r}")
    return value


# ------------------------------------------------------------- rank values


@total_ordering
@dataclass(frozen=True)
class RankValue:
    """``-1`` (empty family), an ordinal, or ``oo``."""

    kind: str  # "minus_one" | "ordinal" | "infinity"
    ordinal: Optional[Ordinal] = None

    @staticmethod
    def of(value: Union[int, Ordinal, "RankValue"]) -> "RankValue":
        if isinstance(value, RankValue):
            return value
        if isinstance(value, int) and value == -1:
            return MINUS_ONE
        return RankValue("ordinal", Ordinal.of(value))

    @property
    def is_ordinal(self) -> bool:
        return self.kind == "ordinal"

    @property
    def is_infinity(self) -> bool:
        return self.kind == "infinity"

    @property
    def is_minus_one(self) -> bool:
        return self.kind == "minus_one"

    def _key(self):
        return {"minus_one": 0, "ordinal": 1, "infinity": 2}[self.kind]

    def __lt__(self, other):
        other = RankValue.of(other) if not isinstance(other, RankValue) else other
        if self.kind != other.kind:
            return self._key() < other._key()
        if self.is_ordinal:
            return compare(self.ordinal, other.ordinal) < 0
        return False

    def __eq__(self, other):
        if isinstance(other, (int, Ordinal)) and not isinstance(other, bool):
            other = RankValue.of(other)
        if not isinstance(other, RankValue):
            return NotImplemented
        return self.kind == other.kind and self.ordinal == other.ordinal

    def __hash__(self):
        return hash((self.kind, self.ordinal))

    def succ(self) -> "RankValue":
        if self.is_ordinal:
            return RankValue("ordinal", succ(self.ordinal))
        if self.is_minus_one:
            return RankValue("ordinal", ZERO)
        return self

    def __str__(self):
        if self.is_minus_one:
            return "-1"
        if self.is_infinity:
            return "oo"
        return format_ordinal(self.ordinal)


MINUS_ONE = RankValue("minus_one")
INFINITY = RankValue("infinity")


def ranked(value: Union[int, Ordinal]) -> RankValue:
    return RankValue("ordinal", Ordinal.of(value))


@dataclass(frozen=True)
class RankDegree:
    """The pair ``(RS, ds)``; ``degree`` is ``None`` unless the rank is an ordinal."""

    rank: RankValue
    degree: Optional[int] = None

    def __post_init__(self):
        if self.rank.is_ordinal:
            if not isinstance(self.degree, int) or self.degree < 1:
                raise ValueError("an ordinal rank needs a degree >= 1")
        elif self.degree is not None:
            raise ValueError(f"rank {self.rank} carries no degree")

    @staticmethod
    def of(rank, degree: Optional[int] = None) -> "RankDegree":
        return RankDegree(RankValue.of(rank), degree)

    def __str__(self):
        if self.rank.is_infinity:
            return "RS=∞"
        if self.rank.is_minus_one:
            return "RS=-1"
        return f"RS={self.rank}, ds={self.degree}"

    def as_json(self):
        return {"rank": str(self.rank), "degree": self.degree}


EMPTY_RD = RankDegree(MINUS_ONE)
INFINITE_RD = RankDegree(INFINITY)


def rank_max(values: Iterable[RankValue]) -> RankValue:
    values = list(values)
    if not values:
        raise ValueError("rank_max of an empty list")
    return max(values)


def degree_sum_at_max(values: Iterable[RankDegree]) -> RankDegree:
    """Rank of a disjoint union of definable parts: maximum rank, with the
    degrees of the parts attaining it added up."""
    values = list(values)
    if not values:
        raise ValueError("degree_sum_at_max of an empty list")
    top = rank_max(v.rank for v in values)
    if not top.is_ordinal:
        return RankDegree(top)
    return RankDegree(top, sum(v.degree for v in values if v.rank == top))
