"""Propositional sentences over 0-ary predicate atoms ``Q0, Q1, ...``.

A complete theory over a language of 0-ary predicates is nothing more than
an assignment of truth values to the atoms, so every question about
sentences reduces to truth tables over a finite support.  Truth tables are
stored bit-parallel in Python ints: row ``r`` of a table over the sorted
support ``(a_0, ..., a_{k-1})`` assigns atom ``a_j`` the value of bit ``j``
of ``r``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Union

from .errors import SentenceSyntaxError, SupportCapExceeded, UnboundAtomError

#: maximum support size for evaluation, canonicalization and entailment
SUPPORT_CAP = 16
#: maximum atom bound for exhaustive enumeration of equivalence classes
ENUMERATION_CAP = 4


# --------------------------------------------------------------------- AST


@dataclass(frozen=True)
class Const:
    value: bool

    def __str__(self):
        return format_sentence(self)


@dataclass(frozen=True)
class Atom:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("atom index must be non-negative")

    def __str__(self):
        return format_sentence(self)


@dataclass(frozen=True)
class Not:
    arg: "Sentence"

    def __str__(self):
        return format_sentence(self)


@dataclass(frozen=True)
class And:
    left: "Sentence"
    right: "Sentence"

    def __str__(self):
        return format_sentence(self)


@dataclass(frozen=True)
class Or:
    left: "Sentence"
    right: "Sentence"

    def __str__(self):
        return format_sentence(self)


@dataclass(frozen=True)
class Implies:
    left: "Sentence"
    right: "Sentence"

    def __str__(self):
        return format_sentence(self)


@dataclass(frozen=True)
class Iff:
    left: "Sentence"
    right: "Sentence"

    def __str__(self):
        return format_sentence(self)


Sentence = Union[Const, Atom, Not, And, Or, Implies, Iff]
Assignment = Mapping[int, Union[bool, int]]

TRUE = Const(True)
FALSE = Const(False)

_BINARY = (And, Or, Implies, Iff)


def conj(*parts: Sentence) -> Sentence:
    """Left-nested conjunction; the empty conjunction is ``true``."""
    if not parts:
        return TRUE
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(*parts: Sentence) -> Sentence:
    """Left-nested disjunction; the empty disjunction is ``false``."""
    if not parts:
        return FALSE
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def literal(index: int, value) -> Sentence:
    return Atom(index) if value else Not(Atom(index))


def cube(assignment: Assignment) -> Sentence:
    """Conjunction of literals fixing the given atoms, in atom order."""
    return conj(*(literal(i, assignment[i]) for i in sorted(assignment)))


def support(phi: Sentence) -> frozenset:
    """Atoms occurring syntactically in ``phi``."""
    out = set()
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(node.index)
        elif isinstance(node, Not):
            stack.append(node.arg)
        elif isinstance(node, _BINARY):
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(out)


def evaluate(phi: Sentence, assignment: Assignment) -> bool:
    """Standard two-valued semantics; every atom of ``phi`` must be bound."""
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, Atom):
        try:
            return bool(assignment[phi.index])
        except KeyError:
            raise UnboundAtomError(f"atom Q{phi.index} is not bound") from None
    if isinstance(phi, Not):
        return not evaluate(phi.arg, assignment)
    left = evaluate(phi.left, assignment)
    if isinstance(phi, And):
        return left and evaluate(phi.right, assignment)
    if isinstance(phi, Or):
        return left or evaluate(phi.right, assignment)
    if isinstance(phi, Implies):
        return (not left) or evaluate(phi.right, assignment)
    if isinstance(phi, Iff):
        return left == evaluate(phi.right, assignment)
    raise TypeError(f"not a sentence: {phi!r}")


# ------------------------------------------------------------------ parsing

_TOKEN = re.compile(r"\s*(?:(<->)|(->)|([&|!()])|(true|false)\b|(Q\d+)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(6) is not None:
            raise SentenceSyntaxError(f"unexpected character {m.group(6)!r}", text, m.start(6))
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("<eof>", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        raise SentenceSyntaxError(message, self.text, self.tokens[self.i][1])

    def parse(self):
        node = self.iff()
        if self.peek() != "<eof>":
            self.fail(f"unexpected token {self.peek()!r}")
        return node

    def iff(self):
        node = self.imp()
        while self.peek() == "<->":
            self.take()
            node = Iff(node, self.imp())
        return node

    def imp(self):
        node = self.or_()
        if self.peek() == "->":
            self.take()
            return Implies(node, self.imp())
        return node

    def or_(self):
        node = self.and_()
        while self.peek() == "|":
            self.take()
            node = Or(node, self.and_())
        return node

    def and_(self):
        node = self.unary()
        while self.peek() == "&":
            self.take()
            node = And(node, self.unary())
        return node

    def unary(self):
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "(":
            self.take()
            node = self.iff()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return node
        if tok == "true":
            self.take()
            return TRUE
        if tok == "false":
            self.take()
            return FALSE
        if tok.startswith("Q") and tok[1:].isdigit():
            self.take()
            return Atom(int(tok[1:]))
        if tok == "<eof>":
            self.fail("unexpected end of input")
        self.fail(f"unexpected token {tok!r}")


def parse_sentence(text: str) -> Sentence:
    """Parse the ASCII sentence grammar (``! & | -> <->``, ``Q<n>``)."""
    return _Parser(text).parse()


# ----------------------------------------------------------------- printing

_LEVEL = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def format_sentence(phi: Sentence) -> str:
    """Print with the fewest parentheses that still re-parse to ``phi``."""
    return _fmt(phi, 0)


def _fmt(phi, ctx):
    if isinstance(phi, Const):
        return "true" if phi.value else "false"
    if isinstance(phi, Atom):
        return f"Q{phi.index}"
    if isinstance(phi, Not):
        return "!" + _fmt(phi.arg, 5)
    kind = type(phi)
    level = _LEVEL[kind]
    if kind is Implies:  # right associative
        body = f"{_fmt(phi.left, level + 1)} -> {_fmt(phi.right, level)}"
    else:
        body = f"{_fmt(phi.left, level)} {_SYMBOL[kind]} {_fmt(phi.right, level + 1)}"
    return f"({body})" if level < ctx else body


# -------------------------------------------------------------- truth tables


@lru_cache(maxsize=None)
def _column(j: int, k: int) -> int:
    """Rows (of 2**k) in which bit ``j`` is set."""
    rows = 1 << k
    half = 1 << j
    unit = ((1 << half) - 1) << half
    return unit * (((1 << rows) - 1) // ((1 << (2 * half)) - 1))


@lru_cache(maxsize=None)
def _zero_column(j: int, k: int) -> int:
    return ((1 << (1 << k)) - 1) & ~_column(j, k) if j < k else (1 << (1 << k)) - 1


def _cofactor_table(table: int, p: int, k: int, value) -> int:
    """Table over k-1 variables obtained by fixing variable position ``p``."""
    if value:
        x = (table >> (1 << p)) & _zero_column(p, k)
    else:
        x = table & _zero_column(p, k)
    for s in range(p, k - 1):
        x = (x | (x >> (1 << s))) & _zero_column(s + 1, k)
    return x & ((1 << (1 << (k - 1))) - 1)


@dataclass(frozen=True)
class BoolFn:
    """A Boolean function in reduced form: no inessential support atoms.

    Two sentences are logically equivalent iff their ``BoolFn`` values are
    equal, which makes this the key for canonical forms.
    """

    support: tuple
    table: int

    @staticmethod
    def make(support, table) -> "BoolFn":
        support = tuple(support)
        k = len(support)
        table &= (1 << (1 << k)) - 1
        p = 0
        while p < k:
            col = _column(p, k)
            if ((table & col) >> (1 << p)) == (table & ~col & ((1 << (1 << k)) - 1)):
                table = _cofactor_table(table, p, k, False)
                support = support[:p] + support[p + 1:]
                k -= 1
            else:
                p += 1
        return BoolFn(support, table)

    @staticmethod
    def const(value: bool) -> "BoolFn":
        return BoolFn((), 1 if value else 0)

    @property
    def is_const(self) -> bool:
        return not self.support

    @property
    def is_true(self) -> bool:
        return not self.support and self.table == 1

    @property
    def is_false(self) -> bool:
        return not self.support and self.table == 0

    def negate(self) -> "BoolFn":
        return BoolFn(self.support, ~self.table & ((1 << (1 << len(self.support))) - 1))

    def value(self, assignment: Assignment) -> bool:
        row = 0
        for j, a in enumerate(self.support):
            try:
                bit = assignment[a]
            except KeyError:
                raise UnboundAtomError(f"atom Q{a} is not bound") from None
            if bit:
                row |= 1 << j
        return bool((self.table >> row) & 1)

    def cofactor_first(self, value) -> "BoolFn":
        """Fix atom 0 and renumber every remaining atom ``i`` to ``i - 1``.

        This is the Shannon step used when descending a family tree one
        atom at a time.
        """
        sup = self.support
        if not sup:
            return self
        if sup[0] != 0:
            return BoolFn(tuple(a - 1 for a in sup), self.table)
        table = _cofactor_table(self.table, 0, len(sup), value)
        return BoolFn.make(tuple(a - 1 for a in sup[1:]), table)

    def rows(self):
        """Satisfying rows as dicts over the support."""
        k = len(self.support)
        for r in range(1 << k):
            if (self.table >> r) & 1:
                yield {a: (r >> j) & 1 for j, a in enumerate(self.support)}

    def to_sentence(self) -> Sentence:
        if self.table == 0:
            return FALSE
        k = len(self.support)
        if self.table == (1 << (1 << k)) - 1:
            return TRUE
        return disj(*(cube(row) for row in self.rows()))


def _check_cap(sup, cap):
    if len(sup) > cap:
        raise SupportCapExceeded(f"support of size {len(sup)} exceeds the cap of {cap}")


def truth_function(phi: Sentence, cap: int = None) -> BoolFn:
    """The reduced Boolean function denoted by ``phi``."""
    sup = tuple(sorted(support(phi)))
    _check_cap(sup, SUPPORT_CAP if cap is None else cap)
    k = len(sup)
    full = (1 << (1 << k)) - 1
    position = {a: j for j, a in enumerate(sup)}

    def table(node):
        if isinstance(node, Const):
            return full if node.value else 0
        if isinstance(node, Atom):
            return _column(position[node.index], k)
        if isinstance(node, Not):
            return full & ~table(node.arg)
        left, right = table(node.left), table(node.right)
        if isinstance(node, And):
            return left & right
        if isinstance(node, Or):
            return left | right
        if isinstance(node, Implies):
            return (full & ~left) | right
        return full & ~(left ^ right)

    return BoolFn.make(sup, table(phi))


def canonical(phi: Sentence) -> Sentence:
    """Sorted complete DNF over the essential atoms of ``phi``."""
    return truth_function(phi).to_sentence()


def equivalent(phi: Sentence, psi: Sentence) -> bool:
    return truth_function(phi) == truth_function(psi)


def is_consistent(phi: Sentence) -> bool:
    return not truth_function(phi).is_false


def entails(phi: Sentence, psi: Sentence) -> bool:
    """``phi |- psi``, decided by truth tables over the joint support."""
    return not is_consistent(And(phi, Not(psi)))


def enumerate_sentences(m: int, limit: Optional[int] = None) -> Iterator[Sentence]:
    """One canonical sentence per equivalence class over ``Q0 .. Q{m-1}``."""
    if m < 0 or m > ENUMERATION_CAP:
        raise SupportCapExceeded(f"atom bound {m} exceeds the enumeration cap of {ENUMERATION_CAP}")
    count = 1 << (1 << m)
    if limit is not None:
        count = min(count, limit)
    atoms = tuple(range(m))
    for table in range(count):
        yield BoolFn.make(atoms, table).to_sentence()


def enumerate_functions(m: int) -> Iterator[BoolFn]:
    """Like :func:`enumerate_sentences` but yields the reduced functions."""
    if m < 0 or m > ENUMERATION_CAP:
        raise SupportCapExceeded(f"atom bound {m} exceeds the enumeration cap of {ENUMERATION_CAP}")
    atoms = tuple(range(m))
    for table in range(1 << (1 << m)):
        yield BoolFn.make(atoms, table)
