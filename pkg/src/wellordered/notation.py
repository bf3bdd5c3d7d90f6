"""ASCII notation for ordinals: ``w^2*3+w+5``.

Grammar (whitespace is ignored)::

    expr   := term ('+' term)*
    term   := atom ('*' atom)*
    atom   := 'w' ('^' power)? | nat | '(' expr ')'
    power  := atom

``^`` binds tighter than ``*``, which binds tighter than ``+``; ``w^w^2`` is
``w^(w^2)``. Any expression is accepted and normalized with ordinal
arithmetic, so ``1+w`` parses to ``w``.
"""
from __future__ import annotations

from .ordinal import ONE, OMEGA, ZERO, Ordinal, omega_pow

MAX_DEPTH = 64


class OrdinalSyntaxError(ValueError):
    def __init__(self, text: str, position: int, expected: set[str]):
        self.text = text
        self.position = position
        self.expected = frozenset(expected)
        got = repr(text[position]) if position < len(text) else "end of input"
        want = ", ".join(sorted(self.expected))
        super().__init__(f"at position {position}: expected one of {{{want}}}, got {got}")


class OrdinalDepthError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, max_depth: int):
        self.text = text
        self.pos = 0
        self.depth = 0
        self.max_depth = max_depth

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected: set[str]):
        self.peek()
        raise OrdinalSyntaxError(self.text, self.pos, expected)

    def nest(self):
        self.depth += 1
        if self.depth > self.max_depth:
            raise OrdinalDepthError(
                f"nesting deeper than {self.max_depth} at position {self.pos}")

    def expr(self) -> Ordinal:
        value = self.term()
        while self.peek() == "+":
            self.pos += 1
            value = value + self.term()
        return value

    def term(self) -> Ordinal:
        value = self.atom()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.atom()
        return value

    def atom(self) -> Ordinal:
        ch = self.peek()
        if ch == "w":
            self.pos += 1
            if self.peek() != "^":
                return OMEGA
            self.pos += 1
            self.nest()
            exponent = self.atom()
            self.depth -= 1
            return omega_pow(exponent)
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return Ordinal(int(self.text[start:self.pos]))
        if ch == "(":
            self.pos += 1
            self.nest()
            value = self.expr()
            if self.peek() != ")":
                self.fail({")", "+", "*"})
            self.pos += 1
            self.depth -= 1
            return value
        self.fail({"w", "<digit>", "("})


def parse(text: str, max_depth: int = MAX_DEPTH) -> Ordinal:
    """Parse *text* into its canonical ordinal."""
    p = _Parser(text, max_depth)
    value = p.expr()
    if p.peek():
        p.fail({"+", "*", "<end>"})
    return value


def _needs_parens(e: Ordinal) -> bool:
    # a bare exponent must be a single atom: a natural or w^x with coefficient 1
    if e.is_finite:
        return False
    return len(e.cnf) > 1 or e.cnf[0][1] > 1


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def render(a: Ordinal, unicode: bool = False) -> str:
    """Canonical text for *a*; ``parse(render(a)) == a`` always holds.

    With ``unicode=True`` the output uses the symbol ω and superscripts for
    finite exponents. That form is for display only and is not parseable.
    """
    if not a:
        return "0"
    w, times = ("ω", "·") if unicode else ("w", "*")
    parts = []
    for e, c in a.terms:
        if e == ZERO:
            parts.append(str(c))
            continue
        if e == ONE:
            head = w
        elif unicode and e.is_finite:
            head = w + str(int(e)).translate(_SUPERSCRIPT)
        else:
            inner = render(e, unicode)
            head = f"{w}^({inner})" if _needs_parens(e) else f"{w}^{inner}"
        parts.append(head if c == 1 else f"{head}{times}{c}")
    return "+".join(parts)
