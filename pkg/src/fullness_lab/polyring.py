"""Exact multivariate polynomial arithmetic.

Coefficients live in Q (arbitrary-precision rationals) or in a prime field
F_p (default p = 32003).  Polynomials are kept normalized: the term list is
strictly descending in the ring's monomial order and carries no zero
coefficients.  A small recursive-descent parser accepts the ASCII grammar
used by problem files (integers, identifiers, ``+ - * ^ ( )`` and, as an
extension so characteristic-zero output round-trips, rational literals
``a/b``).
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Sequence

# Comparison outcomes for monomial_compare.
LT, EQ, GT = -1, 0, 1

DEFAULT_PRIME = 32003


class PolyringError(Exception):
    """Base class for errors raised by the polynomial layer."""


class RingMismatchError(PolyringError):
    pass


class ParseError(PolyringError):
    """Syntax or name error in polynomial text, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """Arithmetic in F_p with elements stored as ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise PolyringError(f"field characteristic must be prime, got {p}")
        self.p = p

    characteristic = property(lambda self: self.p)
    zero = property(lambda self: 0)
    one = property(lambda self: 1)

    def normalize(self, x: int) -> int:
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_fraction(self, num: int, den: int = 1):
        if den % self.p == 0:
            raise PolyringError(
                f"characteristic mismatch: denominator {den} is divisible by p = {self.p}"
            )
        return self.mul(num % self.p, self.inv(den % self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """Arithmetic in Q via fractions.Fraction."""

    __slots__ = ()

    characteristic = property(lambda self: 0)
    zero = property(lambda self: Fraction(0))
    one = property(lambda self: Fraction(1))

    def normalize(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def from_fraction(self, num: int, den: int = 1):
        return Fraction(num, den)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class Monomial(tuple):
    """Exponent vector; behaves as a tuple so it can key dicts cheaply."""

    __slots__ = ()

    @property
    def total_degree(self) -> int:
        return sum(self)

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def div(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise PolyringError(f"monomial {other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self, other))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(min(a, b) for a, b in zip(self, other))

    def is_coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self, other))

    @staticmethod
    def unit(nvars: int) -> "Monomial":
        return Monomial((0,) * nvars)


def _drl_key(exps: Sequence[int]):
    # Degrevlex ascending key: higher total degree wins, ties broken by the
    # last distinct exponent being smaller.
    return (sum(exps), tuple(-e for e in reversed(exps)))


class MonomialOrder:
    """Total order on monomials: degrevlex, lex, or a two-block elimination
    order (first `split` variables dominate, degrevlex inside each block)."""

    __slots__ = ("kind", "split")

    DEGREVLEX = "degrevlex"
    LEX = "lex"
    BLOCK = "block"

    def __init__(self, kind: str = DEGREVLEX, split: int = 0):
        if kind not in (self.DEGREVLEX, self.LEX, self.BLOCK):
            raise PolyringError(f"unknown monomial order kind {kind!r}")
        if kind == self.BLOCK and split <= 0:
            raise PolyringError("block order needs a positive split index")
        self.kind = kind
        self.split = split

    @classmethod
    def degrevlex(cls) -> "MonomialOrder":
        return cls(cls.DEGREVLEX)

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(cls.LEX)

    @classmethod
    def elimination(cls, split: int) -> "MonomialOrder":
        return cls(cls.BLOCK, split)

    def key(self, m: Sequence[int]):
        if self.kind == self.DEGREVLEX:
            return _drl_key(m)
        if self.kind == self.LEX:
            return tuple(m)
        return (_drl_key(m[: self.split]), _drl_key(m[self.split :]))

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        if len(a) != len(b):
            raise RingMismatchError("monomials of different lengths are not comparable")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.split == self.split
        )

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == self.BLOCK:
            return f"MonomialOrder(block, split={self.split})"
        return f"MonomialOrder({self.kind})"


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Compare two monomials; returns LT, EQ or GT."""
    return order.compare(a, b)


_IDENT_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


class PolyRing:
    """A polynomial ring: named variables, a coefficient field, an order."""

    __slots__ = ("variables", "field", "order", "_var_index")

    def __init__(
        self,
        variables: Sequence[str],
        field: PrimeField | RationalField | None = None,
        order: MonomialOrder | None = None,
    ):
        variables = tuple(variables)
        if not variables:
            raise PolyringError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise PolyringError("variable names must be distinct")
        for v in variables:
            if not _IDENT_RE.fullmatch(v):
                raise PolyringError(f"invalid variable name {v!r}")
        self.variables = variables
        self.field = field if field is not None else PrimeField()
        self.order = order if order is not None else MonomialOrder.degrevlex()
        self._var_index = {v: i for i, v in enumerate(variables)}

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field.normalize(c)
        if c == self.field.zero:
            return self.zero()
        return Polynomial(self, ((Monomial.unit(self.nvars), c),))

    def gen(self, name: str) -> "Polynomial":
        try:
            i = self._var_index[name]
        except KeyError:
            raise PolyringError(f"unknown variable {name!r}") from None
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, ((Monomial(exps), self.field.one),))

    def gens(self) -> list["Polynomial"]:
        return [self.gen(v) for v in self.variables]

    def monomial(self, exps: Sequence[int]) -> "Polynomial":
        if len(exps) != self.nvars:
            raise RingMismatchError("exponent vector length mismatch")
        return Polynomial(self, ((Monomial(exps), self.field.one),))

    def from_dict(self, d: dict) -> "Polynomial":
        zero = self.field.zero
        terms = []
        for m, c in d.items():
            c = self.field.normalize(c)
            if c != zero:
                terms.append((Monomial(m), c))
        terms.sort(key=lambda t: self.order.key(t[0]), reverse=True)
        return Polynomial(self, tuple(terms))

    def parse(self, src: str) -> "Polynomial":
        return parse_polynomial(src, self)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def extend_front(self, new_vars: Sequence[str]) -> "PolyRing":
        """Ring with `new_vars` prepended, under the elimination block order
        that makes them dominate (used for intersections and colons)."""
        new_vars = tuple(new_vars)
        return PolyRing(
            new_vars + self.variables,
            self.field,
            MonomialOrder.elimination(len(new_vars)),
        )

    def convert(self, f: "Polynomial") -> "Polynomial":
        """Re-express a polynomial in this ring, matching variables by name.

        Source variables absent from this ring must not actually occur in f.
        """
        src = f.ring
        if src is self:
            return f
        positions = [self._var_index.get(v) for v in src.variables]
        d = {}
        for m, c in f.terms:
            exps = [0] * self.nvars
            for pos, e in zip(positions, m):
                if pos is None:
                    if e != 0:
                        raise RingMismatchError(
                            "polynomial involves a variable not present in the target ring"
                        )
                    continue
                exps[pos] = e
            d[tuple(exps)] = self.field.normalize(c)
        return self.from_dict(d)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"PolyRing({self.field!r}; {', '.join(self.variables)}; {self.order.kind})"


class Polynomial:
    """Normalized polynomial: term tuple strictly descending in ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise PolyringError("zero polynomial has no lead term")
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        if not self.terms:
            raise PolyringError("zero polynomial has no lead term")
        return self.terms[0][1]

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(m.total_degree for m, _ in self.terms)

    @property
    def min_degree(self) -> int:
        if not self.terms:
            return -1
        return min(m.total_degree for m, _ in self.terms)

    @property
    def constant_term(self):
        unit = Monomial.unit(self.ring.nvars)
        for m, c in self.terms:
            if m == unit:
                return c
        return self.ring.field.zero

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __iter__(self) -> Iterator[tuple]:
        return iter(self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        field = self.ring.field
        d = dict(self.terms)
        for m, c in other.terms:
            s = field.add(d.get(m, field.zero), c)
            if s == field.zero:
                d.pop(m, None)
            else:
                d[m] = s
        return self.ring.from_dict(d)

    def __neg__(self) -> "Polynomial":
        field = self.ring.field
        return Polynomial(self.ring, tuple((m, field.neg(c)) for m, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        d: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = m1.mul(m2)
                s = field.add(d.get(m, field.zero), field.mul(c1, c2))
                if s == field.zero:
                    d.pop(m, None)
                else:
                    d[m] = s
        return self.ring.from_dict(d)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        c = field.normalize(c)
        if c == field.zero:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, field.mul(k, c)) for m, k in self.terms))

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        field = self.ring.field
        if c == field.zero:
            return self.ring.zero()
        return Polynomial(
            self.ring, tuple((mm.mul(m), field.mul(cc, c)) for mm, cc in self.terms)
        )

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise PolyringError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        field = self.ring.field
        inv = field.inv(self.lead_coeff)
        return Polynomial(self.ring, tuple((m, field.mul(c, inv)) for m, c in self.terms))

    def substitute(self, values: dict) -> "Polynomial":
        """Substitute polynomials for variables (by name)."""
        ring = self.ring
        target = None
        for v in values.values():
            target = v.ring
            break
        if target is None:
            target = ring
        result = target.zero()
        for m, c in self.terms:
            term = target.constant(c)
            for name, e in zip(ring.variables, m):
                if e == 0:
                    continue
                if name in values:
                    term = term * (values[name] ** e)
                else:
                    term = term * (target.gen(name) ** e)
            result = result + term
        return result

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- printing ----------------------------------------------------------

    def _term_str(self, m: Monomial, c) -> str:
        parts = []
        mono = "*".join(
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(self.ring.variables, m)
            if e != 0
        )
        one = self.ring.field.one
        if not mono:
            return _coeff_str(c)
        if c != one:
            parts.append(_coeff_str(c))
        parts.append(mono)
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.terms):
            neg = isinstance(c, Fraction) and c < 0
            body = self._term_str(m, -c if neg else c)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


def _coeff_str(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def poly_multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact product of two polynomials of the same ring."""
    return f * g


# -- parser ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*^()/]))"
)


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            stripped = src[pos:].lstrip()
            at = len(src) - len(stripped)
            raise ParseError(f"unexpected character {src[at]!r}", at)
        if m.group("int") is not None:
            tokens.append(_Token("int", int(m.group("int")), m.start("int")))
        elif m.group("ident") is not None:
            tokens.append(_Token("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(_Token(m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(_Token("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: PolyRing):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {self._describe(tok)}", tok.pos)
        return tok

    @staticmethod
    def _describe(tok: _Token) -> str:
        return "end of input" if tok.kind == "end" else repr(tok.value)

    def parse(self) -> Polynomial:
        poly = self.expression()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.value!r}", tok.pos)
        return poly

    def expression(self) -> Polynomial:
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.next().kind == "-" else 1
        poly = self.term()
        if sign < 0:
            poly = -poly
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            poly = poly - rhs if op == "-" else poly + rhs
        return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while self.peek().kind == "*":
            self.next()
            poly = poly * self.factor()
        return poly

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "^":
            caret = self.next()
            tok = self.expect("int")
            if tok.value < 0:
                raise ParseError("exponent must be a non-negative integer", caret.pos)
            base = base ** tok.value
        return base

    def atom(self) -> Polynomial:
        tok = self.next()
        if tok.kind == "int":
            num = tok.value
            if self.peek().kind == "/":
                slash = self.next()
                den = self.expect("int").value
                if den == 0:
                    raise ParseError("zero denominator", slash.pos)
                try:
                    c = self.ring.field.from_fraction(num, den)
                except PolyringError as e:
                    raise ParseError(str(e), slash.pos) from None
                return self.ring.constant(c)
            return self.ring.constant(num)
        if tok.kind == "ident":
            if tok.value not in self.ring._var_index:
                raise ParseError(f"unknown variable {tok.value!r}", tok.pos)
            return self.ring.gen(tok.value)
        if tok.kind == "(":
            poly = self.expression()
            self.expect(")")
            return poly
        raise ParseError(f"unexpected {self._describe(tok)}", tok.pos)


def parse_polynomial(src: str, ring: PolyRing) -> Polynomial:
    """Parse polynomial text into normalized form.

    Grammar: integers (optionally ``a/b`` rationals), ring variables,
    ``+ - * ^`` and parentheses; ``^`` takes a non-negative integer
    literal; multiplication is always explicit.
    """
    return _Parser(src, ring).parse()


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent vectors of the given total degree, in a stable order."""
    if degree < 0:
        return
    if nvars == 1:
        yield Monomial((degree,))
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield Monomial((first,) + tuple(rest))


def monomials_up_to_degree(nvars: int, max_degree: int) -> Iterator[Monomial]:
    for d in range(max_degree + 1):
        yield from monomials_of_degree(nvars, d)
