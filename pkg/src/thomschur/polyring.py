"""Sparse multivariate polynomials with exact integer / rational coefficients.

A :class:`Poly` carries a tuple of generators (variable names, sorted by
:func:`var_key`) and a dict from packed exponent vectors to coefficients.
Exponents of the k-th generator live in bits ``[k*_BITS, (k+1)*_BITS)`` of a
Python int, so monomial multiplication is integer addition.

Variable names are a lower-case letter optionally followed by digits
(``x``, ``x1``, ``b12``).  That keeps juxtaposition unambiguous in the text
grammar: ``2x1x2`` means ``2 * x1 * x2``.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Poly",
    "ParseError",
    "parse_poly",
    "var_key",
    "VAR_RE",
]

VAR_RE = re.compile(r"[a-z][0-9]*\Z")

_BITS = 32
_MASK = (1 << _BITS) - 1
# exponents must stay below 2**(_BITS - 1) so that a sum of two never carries
_MAX_EXP = (1 << (_BITS - 1)) - 1

# Fixed variable order: x before the probe letters b, then Chern roots y.
# letters, then Chern roots.  Other prefixes sort alphabetically after.
_PREFIX_RANK = {"x": 0, "b": 1, "y": 2}

Coeff = Union[int, Fraction]


def var_key(name: str):
    """Sort key of a variable name; smaller keys are the "larger" variables
    of the graded-lex order."""
    prefix, digits = name[0], name[1:]
    return (_PREFIX_RANK.get(prefix, 10), prefix, int(digits) if digits else -1)


def _check_var(name: str) -> str:
    if not isinstance(name, str) or not VAR_RE.match(name):
        raise ValueError(f"invalid variable name {name!r}")
    return name


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _pack(exps) -> int:
    m = 0
    for k, e in enumerate(exps):
        if e < 0 or e > _MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        m |= e << (_BITS * k)
    return m


def _unpack(m: int, n: int) -> tuple:
    return tuple((m >> (_BITS * k)) & _MASK for k in range(n))


def _guard_mask(n: int) -> int:
    g = 0
    for k in range(n):
        g |= 1 << (_BITS * k + _BITS - 1)
    return g


def _remap(terms: dict, old: tuple, new: tuple) -> dict:
    """Re-pack ``terms`` from generator tuple ``old`` into ``new`` (a superset)."""
    if old == new:
        return terms
    pos = [new.index(v) for v in old]
    n = len(old)
    out = {}
    for m, c in terms.items():
        mm = 0
        for k in range(n):
            e = (m >> (_BITS * k)) & _MASK
            if e:
                mm |= e << (_BITS * pos[k])
        out[mm] = c
    return out


def _merge_gens(a: tuple, b: tuple) -> tuple:
    if a == b:
        return a
    return tuple(sorted(set(a) | set(b), key=var_key))


class Poly:
    """Immutable sparse polynomial.

    Build them with :meth:`const`, :meth:`var`, :meth:`from_terms` or
    :func:`parse_poly`, then combine with the usual operators.  Integers and
    Fractions are coerced on the fly.
    """

    __slots__ = ("_gens", "_terms")

    def __init__(self, terms: dict | None = None, gens: tuple = ()):
        terms = {m: _norm(c) for m, c in (terms or {}).items() if c != 0}
        # canonical form: gens are exactly the occurring variables
        used = 0
        for m in terms:
            used |= m
        if gens:
            present = tuple(v for k, v in enumerate(gens) if (used >> (_BITS * k)) & _MASK)
            if present != gens:
                terms = _restrict(terms, gens, present)
                gens = present
        self._gens = gens
        self._terms = terms

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        if not isinstance(c, Rational):
            raise TypeError(f"coefficient must be rational, got {type(c).__name__}")
        return cls({0: c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({1: 1}, (_check_var(name),))

    @classmethod
    def from_terms(cls, items: Iterable) -> "Poly":
        """Build from ``(exponents: Mapping[str, int], coeff)`` pairs."""
        items = [(dict(e), c) for e, c in items]
        names = set()
        for e, _ in items:
            names.update(_check_var(v) for v, k in e.items() if k)
        gens = tuple(sorted(names, key=var_key))
        terms: dict = {}
        for e, c in items:
            m = _pack([e.get(v, 0) for v in gens])
            terms[m] = terms.get(m, 0) + c
        return cls(terms, gens)

    # -- accessors ----------------------------------------------------------

    @property
    def gens(self) -> tuple:
        return self._gens

    @property
    def variables(self) -> frozenset:
        return frozenset(self._gens)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._gens

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def constant_term(self) -> Coeff:
        return self._terms.get(0, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        n = len(self._gens)
        return max((sum(_unpack(m, n)) for m in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self._gens:
            return 0 if self._terms else -1
        k = self._gens.index(name)
        return max(((m >> (_BITS * k)) & _MASK for m in self._terms), default=-1)

    def _key(self, m: int):
        e = _unpack(m, len(self._gens))
        return (sum(e), e)

    def items(self) -> Iterator:
        """``(monomial, coeff)`` pairs in graded-lex descending order.

        A monomial is a tuple of ``(var, exponent)`` pairs; it is hashable and
        independent of which other variables the polynomial happens to use.
        """
        gens = self._gens
        n = len(gens)
        for m in sorted(self._terms, key=self._key, reverse=True):
            e = _unpack(m, n)
            yield tuple((gens[k], e[k]) for k in range(n) if e[k]), self._terms[m]

    def as_dict(self) -> dict:
        return dict(self.items())

    def coeff(self, monomial: Mapping[str, int] | tuple) -> Coeff:
        mono = dict(monomial)
        if any(v not in self._gens for v, e in mono.items() if e):
            return 0
        m = _pack([mono.get(v, 0) for v in self._gens])
        return self._terms.get(m, 0)

    def leading_term(self):
        """Graded-lex leading ``(monomial, coeff)``; raises on zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=self._key)
        e = _unpack(m, len(self._gens))
        return tuple((v, k) for v, k in zip(self._gens, e) if k), self._terms[m]

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, Rational):
            return Poly.const(other)
        return NotImplemented

    def _aligned(self, other: "Poly"):
        gens = _merge_gens(self._gens, other._gens)
        return (gens, _remap(self._terms, self._gens, gens),
                _remap(other._terms, other._gens, gens))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        gens, a, b = self._aligned(other)
        out = dict(a)
        for m, c in b.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, gens)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()}, self._gens)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return Poly()
            return Poly({m: c * other for m, c in self._terms.items()}, self._gens)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        gens, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        guard = _guard_mask(len(gens))
        if guard and any(m & guard for m in out):
            raise OverflowError("exponent overflow in product")
        return Poly(out, gens)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return Poly({m: Fraction(c) / other for m, c in self._terms.items()}, self._gens)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if len(self._terms) == 1 and e:
            (m, c), = self._terms.items()
            n = len(self._gens)
            return Poly({_pack([k * e for k in _unpack(m, n)]): c ** e}, self._gens)
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def div_exact(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; ``ValueError`` if ``other`` does not
        divide ``self`` in Q[vars]."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        gens = _merge_gens(self._gens, other._gens)
        n = len(gens)
        rem = dict(_remap(self._terms, self._gens, gens))
        div = _remap(other._terms, other._gens, gens)

        def key(m):
            e = _unpack(m, n)
            return (-sum(e), tuple(-a for a in e), m)

        lm = min(div, key=key)
        lc = div[lm]
        lexp = _unpack(lm, n)
        quot: dict = {}
        # leading monomials only move down in the monomial order, so a lazy
        # heap of the remainder's monomials is enough
        heap = [key(m) for m in rem]
        heapq.heapify(heap)
        while rem:
            m = heapq.heappop(heap)[2]
            if m not in rem:
                continue
            e = _unpack(m, n)
            if any(a < b for a, b in zip(e, lexp)):
                raise ValueError("inexact polynomial division")
            q = m - lm
            c = rem[m]
            qc = c // lc if isinstance(c, int) and isinstance(lc, int) and c % lc == 0 else Fraction(c) / lc
            quot[q] = qc
            for md, cd in div.items():
                mm = md + q
                v = rem.get(mm, 0) - qc * cd
                if v:
                    if mm not in rem:
                        heapq.heappush(heap, key(mm))
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Poly(quot, gens)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._gens == other._gens and self._terms == other._terms

    def __hash__(self):
        return hash((self._gens, frozenset(self._terms.items())))

    # -- evaluation ---------------------------------------------------------

    def substitute(self, bindings: Mapping[str, object]) -> "Poly":
        """Simultaneous substitution; unbound variables are left alone."""
        if not any(v in bindings for v in self._gens):
            return self
        n = len(self._gens)
        images = []
        for v in self._gens:
            b = bindings.get(v)
            images.append(Poly.var(v) if b is None else self._coerce(b))
        powers = [{} for _ in range(n)]
        acc = Poly()
        for m, c in self._terms.items():
            e = _unpack(m, n)
            t = Poly.const(c)
            for k in range(n):
                if e[k]:
                    cache = powers[k]
                    if e[k] not in cache:
                        cache[e[k]] = images[k] ** e[k]
                    t = t * cache[e[k]]
            acc = acc + t
        return acc

    def eval_at(self, point: Mapping[str, object]) -> Coeff:
        """Exact value at a point; the point must bind every variable."""
        missing = [v for v in self._gens if v not in point]
        if missing:
            raise KeyError(f"unbound variables: {missing}")
        n = len(self._gens)
        vals = [point[v] for v in self._gens]
        total = 0
        for m, c in self._terms.items():
            e = _unpack(m, n)
            t = c
            for k in range(n):
                if e[k]:
                    t *= vals[k] ** e[k]
            total += t
        return _norm(total)

    def graded_component(self, d: int) -> "Poly":
        n = len(self._gens)
        return Poly({m: c for m, c in self._terms.items() if sum(_unpack(m, n)) == d}, self._gens)

    def is_homogeneous(self) -> bool:
        n = len(self._gens)
        return len({sum(_unpack(m, n)) for m in self._terms}) <= 1

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            body = "".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            neg = c < 0
            a = -c if neg else c
            if not body:
                txt = _fmt_coeff(a, bare=True)
            elif a == 1:
                txt = body
            else:
                txt = _fmt_coeff(a, bare=False) + body
            parts.append(("-" if neg else "+", txt))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, txt in parts[1:]:
            out += f" {sign} {txt}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


def _restrict(terms: dict, gens: tuple, present: tuple) -> dict:
    keep = [k for k, v in enumerate(gens) if v in present]
    out = {}
    for m, c in terms.items():
        mm = 0
        for j, k in enumerate(keep):
            mm |= ((m >> (_BITS * k)) & _MASK) << (_BITS * j)
        out[mm] = c
    return out


def _fmt_coeff(a, bare: bool) -> str:
    if isinstance(a, Fraction):
        return f"{a.numerator}/{a.denominator}" if bare else f"({a.numerator}/{a.denominator})"
    return str(a)


# ---------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    """Malformed expression text; carries the offending position."""

    def __init__(self, message: str, text: str, pos: int, expected: str | None = None):
        self.text = text
        self.pos = pos
        self.expected = expected
        detail = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at position {pos}{detail}: {text!r}")


class Lexer:
    """Regex tokenizer shared by the small grammars of this package."""

    def __init__(self, text: str, spec: list):
        self.text = text
        self.tokens = []
        rx = re.compile("|".join(f"(?P<{name}>{pat})" for name, pat in spec))
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            mt = rx.match(text, pos)
            if not mt:
                raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
            self.tokens.append((mt.lastgroup, mt.group(), pos))
            pos = mt.end()
        self.tokens.append(("EOF", "", len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, *kinds):
        if self.peek()[0] in kinds:
            return self.next()
        return None

    def expect(self, kind: str, what: str | None = None):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"unexpected {tok[1] or 'end of input'!r}", self.text, tok[2], what or kind)
        return self.next()

    def fail(self, what: str):
        tok = self.peek()
        raise ParseError(f"unexpected {tok[1] or 'end of input'!r}", self.text, tok[2], what)


POLY_TOKENS = [
    ("NUM", r"\d+"),
    ("VAR", r"[a-z]\d*"),
    ("POW", r"\^|\*\*"),
    ("OP", r"[-+*/()]"),
]


class _PolyParser:
    def __init__(self, text: str):
        self.lx = Lexer(text, POLY_TOKENS)

    def parse(self) -> Poly:
        p = self.expr()
        self.lx.expect("EOF", "operator or end of input")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while True:
            tok = self.lx.peek()
            if tok[:2] == ("OP", "+"):
                self.lx.next()
                p = p + self.term()
            elif tok[:2] == ("OP", "-"):
                self.lx.next()
                p = p - self.term()
            else:
                return p

    def _starts_factor(self) -> bool:
        kind, val, _ = self.lx.peek()
        return kind in ("NUM", "VAR") or (kind, val) == ("OP", "(")

    def term(self) -> Poly:
        p = self.unary()
        while True:
            tok = self.lx.peek()
            if tok[:2] == ("OP", "*"):
                self.lx.next()
                p = p * self.unary()
            elif tok[:2] == ("OP", "/"):
                self.lx.next()
                d = self.unary()
                if not d.is_constant() or d.is_zero():
                    raise ParseError("division by a non-constant or zero", self.lx.text, tok[2])
                p = p / d.constant_term
            elif self._starts_factor():
                p = p * self.power()
            else:
                return p

    def unary(self) -> Poly:
        tok = self.lx.peek()
        if tok[:2] == ("OP", "-"):
            self.lx.next()
            return -self.unary()
        if tok[:2] == ("OP", "+"):
            self.lx.next()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.lx.accept("POW"):
            e = self.lx.expect("NUM", "integer exponent")
            base = base ** int(e[1])
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.lx.peek()
        if kind == "NUM":
            self.lx.next()
            return Poly.const(int(val))
        if kind == "VAR":
            self.lx.next()
            return Poly.var(val)
        if (kind, val) == ("OP", "("):
            self.lx.next()
            p = self.expr()
            if self.lx.peek()[:2] != ("OP", ")"):
                self.lx.fail("')'")
            self.lx.next()
            return p
        self.lx.fail("number, variable or '('")


def parse_poly(text: str) -> Poly:
    """Parse ``-2x1^2 + 5x1*x2 - (1/2)x2^2`` style text (``^`` or ``**``)."""
    return _PolyParser(text).parse()
