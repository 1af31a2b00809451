"""Letters, alphabets and difference arguments ``A - B``.

A letter is an integer linear form, used as a single variable no matter how
many variables it mentions (the "boxed" convention): ``[2]`` is one letter of
value 2, while the bare integer ``2`` means two unit letters.

Text grammar::

    diff    := ['+'|'-'] group (('+'|'-') group)*
    group   := NUM | VAR | NAMED | '[' linear form ']' | '(' diff ')'
    NAMED   := upper-case letter '_' n   e.g. X_2 -> x1 + x2, B_3 -> b1 + b2 + b3

Terms carrying a minus sign go to the minus alphabet.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .polyring import Lexer, ParseError, Poly, parse_poly, var_key


class DegreeOverflow(ValueError):
    """A product of letters left the space of linear forms."""


@dataclass(frozen=True)
class Letter:
    const: int = 0
    coeffs: tuple = ()  # ((var, int), ...) sorted by var_key, no zeros

    def __post_init__(self):
        merged: dict = {}
        for v, c in self.coeffs:
            merged[v] = merged.get(v, 0) + int(c)
        coeffs = tuple(sorted(((v, c) for v, c in merged.items() if c), key=lambda t: var_key(t[0])))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "const", int(self.const))

    @classmethod
    def constant(cls, n: int) -> "Letter":
        return cls(n)

    @classmethod
    def variable(cls, name: str, coeff: int = 1) -> "Letter":
        Poly.var(name)  # validates the name
        return cls(0, ((name, coeff),))

    @classmethod
    def from_poly(cls, p: Poly) -> "Letter":
        if p.degree() > 1:
            raise DegreeOverflow(f"letter {p} has degree > 1")
        const, coeffs = 0, []
        for mono, c in p.items():
            if c != int(c):
                raise ValueError(f"letter {p} has non-integer coefficients")
            if mono:
                coeffs.append((mono[0][0], int(c)))
            else:
                const = int(c)
        return cls(const, tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> "Letter":
        return cls.from_poly(parse_poly(text))

    def is_constant(self) -> bool:
        return not self.coeffs

    def as_poly(self) -> Poly:
        p = Poly.const(self.const)
        for v, c in self.coeffs:
            p = p + c * Poly.var(v)
        return p

    def __neg__(self):
        return Letter(-self.const, tuple((v, -c) for v, c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            other = Letter(other)
        if not isinstance(other, Letter):
            return NotImplemented
        if self.coeffs and other.coeffs:
            raise DegreeOverflow(f"{self} * {other} is not linear")
        if not self.coeffs:
            self, other = other, self
        k = other.const
        return Letter(self.const * k, tuple((v, c * k) for v, c in self.coeffs))

    __rmul__ = __mul__

    def is_bare_variable(self) -> bool:
        return self.const == 0 and len(self.coeffs) == 1 and self.coeffs[0][1] == 1

    def sort_key(self):
        return (self.const, tuple((var_key(v), c) for v, c in self.coeffs))

    def __str__(self):
        return str(self.as_poly())

    def render(self) -> str:
        """Grammar form: bare variables stay bare, everything else is boxed."""
        if self.is_bare_variable():
            return self.coeffs[0][0]
        return f"[{self}]"


class Alphabet:
    """A finite multiset of letters; insertion order is kept for display only."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for a in letters:
            if not isinstance(a, Letter):
                raise TypeError(f"not a Letter: {a!r}")
        self.letters = letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        if not isinstance(other, Alphabet):
            return NotImplemented
        return Alphabet(self.letters + other.letters)

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return Counter(self.letters) == Counter(other.letters)

    def __hash__(self):
        return hash(frozenset(Counter(self.letters).items()))

    def __sub__(self, other: "Alphabet") -> "DiffArg":
        if not isinstance(other, Alphabet):
            return NotImplemented
        return DiffArg(self, other)

    def is_constant(self) -> bool:
        return all(a.is_constant() for a in self.letters)

    def variables(self) -> set:
        return {v for a in self.letters for v, _ in a.coeffs}

    def render(self) -> str:
        if not self.letters:
            return "0"
        units = sum(1 for a in self.letters if a == _UNIT)
        out, placed = [], False
        for a in self.letters:
            if a == _UNIT:
                if not placed:
                    out.append(str(units))
                    placed = True
            else:
                out.append(a.render())
        return " + ".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Alphabet({self.render()!r})"


_UNIT = Letter(1)


@dataclass(frozen=True)
class DiffArg:
    """The argument ``plus - minus`` of a symmetric function."""

    plus: Alphabet = Alphabet()
    minus: Alphabet = Alphabet()

    def variables(self) -> set:
        return self.plus.variables() | self.minus.variables()

    def render(self) -> str:
        head = self.plus.render() if len(self.plus) or not len(self.minus) else ""
        tail = [a.render() if a != _UNIT else "1" for a in self.minus]
        if not head:
            return "-" + " - ".join(tail)
        return " - ".join([head] + tail)

    def __str__(self):
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "DiffArg":
        return parse_diffarg(text)


# -- constructors -------------------------------------------------------------

def from_integer(n: int) -> Alphabet:
    """The unboxed integer n: n unit letters."""
    if n < 0:
        raise ValueError("letter count must be nonnegative")
    return Alphabet([_UNIT] * n)


def boxed(form) -> Alphabet:
    """One letter holding `form` (int, Letter, Poly, or linear-form text)."""
    if isinstance(form, int):
        form = Letter(form)
    elif isinstance(form, Poly):
        form = Letter.from_poly(form)
    elif isinstance(form, str):
        form = Letter.parse(form)
    return Alphabet([form])


def letters_of(*names: str) -> Alphabet:
    return Alphabet(Letter.variable(v) for v in names)


def generic(prefix: str, n: int) -> Alphabet:
    """``generic("b", 3)`` is the alphabet b1 + b2 + b3."""
    return letters_of(*(f"{prefix}{j}" for j in range(1, n + 1)))


def scale(A: Alphabet, by) -> Alphabet:
    """Letter-wise product ``A * by``."""
    if isinstance(by, int):
        by = Letter(by)
    return Alphabet(a * by for a in A)


def negate_letters(A: Alphabet) -> Alphabet:
    return Alphabet(-a for a in A)


# -- parsing ------------------------------------------------------------------

_TOKENS = [
    ("NAMED", r"[A-Z]_(?:\{\d+\}|\d+)"),
    ("NUM", r"\d+"),
    ("VAR", r"[a-z]\d*"),
    ("BOX", r"\[[^\[\]]*\]"),
    ("OP", r"[-+()]"),
]


def parse_diffarg(text: str) -> DiffArg:
    lx = Lexer(text, _TOKENS)
    plus, minus = [], []

    def group(sign: int):
        kind, val, pos = lx.peek()
        if kind == "NUM":
            lx.next()
            letters = [_UNIT] * int(val)
        elif kind == "VAR":
            lx.next()
            letters = [Letter.variable(val)]
        elif kind == "NAMED":
            lx.next()
            n = int(val[2:].strip("{}"))
            letters = list(generic(val[0].lower(), n))
        elif kind == "BOX":
            lx.next()
            inner = val[1:-1]
            try:
                letters = [Letter.parse(inner)]
            except ParseError as exc:
                raise ParseError(f"bad boxed letter: {exc}", text, pos + 1 + exc.pos) from None
            except ValueError as exc:
                raise ParseError(str(exc), text, pos) from None
        elif (kind, val) == ("OP", "("):
            lx.next()
            seq(sign)
            if lx.peek()[:2] != ("OP", ")"):
                lx.fail("')'")
            lx.next()
            return
        else:
            lx.fail("integer, variable, X_n or [linear form]")
        (plus if sign > 0 else minus).extend(letters)

    def seq(sign: int):
        s = sign
        tok = lx.peek()
        if tok[:2] == ("OP", "-"):
            lx.next()
            s = -sign
        elif tok[:2] == ("OP", "+"):
            lx.next()
        group(s)
        while lx.peek()[:2] in (("OP", "+"), ("OP", "-")):
            op = lx.next()[1]
            group(sign if op == "+" else -sign)

    if "[" in text and text.count("[") != text.count("]"):
        pos = text.rfind("[")
        raise ParseError("unbalanced '['", text, pos, "']'")
    seq(1)
    lx.expect("EOF", "'+', '-' or end of input")
    return DiffArg(Alphabet(plus), Alphabet(minus))
