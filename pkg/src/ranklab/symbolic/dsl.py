"""Text form of symbolic families.

::

    family := "empty" | "full" | "eminimal"
            | "fin" "(" "n" "=" INT ")" "{" [point ("," point)*] "}"
            | "omegasum" "(" family [";" opt ("," opt)*] ")"     opt := stride=INT | phase=INT
            | "union" "(" family ("," family)* ")"
            | "guard" "(" pin ("," pin)* ";" family ")"          pin := Q<INT>=<0|1>
            | "adjoin" "(" family ";" "{" [point ("," point)*] "}" ")"
            | "tower" "(" ordinal "," INT ")"
            | "limsum" "(" ordinal "," INT ["," "closed"] ")"
    point  := bits ["(1)"]

A point is read with ``Q0`` leftmost; the ``(1)`` suffix makes every later
atom true, otherwise later atoms are false.  Inside ``fin(n=k)`` every point
lists exactly ``k`` bits.
"""

from __future__ import annotations

import re

from ..errors import FamilySyntaxError, OrdinalBoundError, OrdinalSyntaxError
from ..ordinals import format_ordinal, parse_ordinal
from .nodes import (
    EMINIMAL,
    EMPTY,
    FULL,
    Adjoin,
    Family,
    Fin,
    Guard,
    LimitSum,
    OmegaSum,
    Union,
    adjoin,
    build_tower,
    fin,
    guard,
    limitsum,
    omegasum,
    union,
)
from .points import PointTheory, format_point

_WORD = re.compile(r"[A-Za-z_]+")
_INT = re.compile(r"\d+")
_POINT = re.compile(r"[01]*(\([01]\))?")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise FamilySyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def match(self, pattern, what: str) -> str:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m or not m.group(0):
            self.fail(f"expected {what}")
        self.pos = m.end()
        return m.group(0)

    def integer(self) -> int:
        return int(self.match(_INT, "an integer"))

    def until(self, stops: str) -> str:
        """Raw text up to the first depth-0 character in ``stops``."""
        self.skip()
        depth = 0
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0 and ch in stops:
                    break
                depth -= 1
            elif depth == 0 and ch in stops:
                break
            self.pos += 1
        return self.text[start:self.pos].strip()

    def point(self, width=None) -> PointTheory:
        start = self.pos
        raw = self.match(_POINT, "a point")
        default = 0
        bits = raw
        if raw.endswith(")"):
            default = int(raw[-2])
            bits = raw[:-3]
        if width is not None and len(bits) != width:
            self.pos = start
            self.fail(f"point {raw!r} does not have {width} bits")
        return PointTheory.from_bits(bits, default)

    def point_set(self, width=None) -> list:
        self.expect("{")
        points = []
        if not self.accept("}"):
            points.append(self.point(width))
            while self.accept(","):
                points.append(self.point(width))
            self.expect("}")
        return points

    def ordinal(self, stops: str):
        start = self.pos
        raw = self.until(stops)
        try:
            return parse_ordinal(raw)
        except OrdinalSyntaxError as exc:
            self.pos = start
            self.fail(str(exc))

    def family(self) -> Family:
        word_pos = self.pos
        word = self.match(_WORD, "a family expression")
        if word == "empty":
            return EMPTY
        if word == "full":
            return FULL
        if word == "eminimal":
            return EMINIMAL
        if word == "fin":
            self.expect("(")
            self.expect("n")
            self.expect("=")
            width = self.integer()
            self.expect(")")
            return fin(self.point_set(width))
        if word == "omegasum":
            self.expect("(")
            child = self.family()
            options = {"stride": 1, "phase": 0}
            if self.accept(";"):
                while True:
                    name = self.match(_WORD, "stride or phase")
                    if name not in options:
                        self.fail(f"unknown omegasum option {name!r}")
                    self.expect("=")
                    options[name] = self.integer()
                    if not self.accept(","):
                        break
            self.expect(")")
            if options["stride"] < 1:
                self.fail("stride must be at least 1")
            return omegasum(child, options["stride"], options["phase"])
        if word == "union":
            self.expect("(")
            children = [self.family()]
            while self.accept(","):
                children.append(self.family())
            self.expect(")")
            return union(*children)
        if word == "guard":
            self.expect("(")
            pins = []
            while True:
                self.expect("Q")
                atom = self.integer()
                self.expect("=")
                value = self.match(re.compile(r"[01]"), "0 or 1")
                pins.append((atom, int(value)))
                if not self.accept(","):
                    break
            self.expect(";")
            child = self.family()
            self.expect(")")
            return guard(pins, child)
        if word == "adjoin":
            self.expect("(")
            child = self.family()
            self.expect(";")
            points = self.point_set()
            self.expect(")")
            return adjoin(child, points)
        if word == "tower":
            self.expect("(")
            alpha = self.ordinal(",")
            self.expect(",")
            n = self.integer()
            self.expect(")")
            if n < 1:
                self.fail("tower degree must be at least 1")
            try:
                return build_tower(alpha, n)
            except OrdinalBoundError as exc:
                self.fail(str(exc))
        if word == "limsum":
            self.expect("(")
            alpha = self.ordinal(",")
            self.expect(",")
            start = self.integer()
            closed = False
            if self.accept(","):
                self.expect("closed")
                closed = True
            self.expect(")")
            if not alpha.is_limit:
                self.fail(f"limsum needs a limit ordinal, got {format_ordinal(alpha)}")
            return limitsum(alpha, start, closed)
        self.pos = word_pos
        self.fail(f"unknown family constructor {word!r}")


def parse_family(text: str) -> Family:
    reader = _Reader(text)
    node = reader.family()
    if reader.peek():
        reader.fail("trailing input")
    return node


def _points_text(points, width=None) -> str:
    items = sorted(format_point(p, width) for p in points)
    return "{" + ", ".join(items) + "}"


def format_family(node: Family) -> str:
    if node is EMPTY:
        return "empty"
    if node is FULL:
        return "full"
    if node is EMINIMAL:
        return "eminimal"
    if isinstance(node, Fin):
        width = max(1, max(p.span for p in node.points))
        return f"fin(n={width}){_points_text(node.points, width)}"
    if isinstance(node, OmegaSum):
        inner = format_family(node.child)
        if node.stride == 1 and node.phase == 0:
            return f"omegasum({inner})"
        return f"omegasum({inner}; stride={node.stride}, phase={node.phase})"
    if isinstance(node, Union):
        return "union(" + ", ".join(format_family(c) for c in node.children) + ")"
    if isinstance(node, Guard):
        pins = ", ".join(f"Q{a}={v}" for a, v in node.pins)
        return f"guard({pins}; {format_family(node.child)})"
    if isinstance(node, Adjoin):
        return f"adjoin({format_family(node.child)}; {_points_text(node.points)})"
    if isinstance(node, LimitSum):
        tail = ", closed" if node.closed else ""
        return f"limsum({format_ordinal(node.limit)}, {node.start}{tail})"
    raise TypeError(f"unknown family node {node!r}")
