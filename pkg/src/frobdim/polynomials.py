"""Exact arithmetic over prime fields: monomials, polynomials, free-module vectors.

Polynomials are immutable term lists over F_p.  Each term is a pair
``(key, coeff)`` where ``key`` is an integer tuple encoding the monomial so
that the active monomial order is plain tuple comparison, descending keys
first.  Multiplication of monomials is componentwise addition of keys for
both supported orders, which keeps the inner loops free of decode steps.

Free-module terms append ``-position`` to the monomial key; tuple comparison
then realises term-over-position with ties broken toward lower positions.
"""

from __future__ import annotations

import operator
import re
from typing import Iterable, Iterator

from .errors import ParseError

MAX_VARS = 16
MAX_EXPONENT = 10**6
_EXP_HARD_LIMIT = 2**31 - 1

GREVLEX = "grevlex"
LEX = "lex"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class FieldContext:
    """The prime field F_p.  Elements are ints reduced into [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise ValueError(f"characteristic must be an int, got {p!r}")
        if not (2 <= p < 2**31) or not _is_prime(p):
            raise ValueError(f"characteristic must be a prime in [2, 2^31), got {p}")
        self.p = p

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldContext) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("FieldContext", self.p))

    def __repr__(self) -> str:
        return f"FieldContext(p={self.p})"


def _check_exponent(e: int) -> int:
    e = int(e)
    if e < 0:
        raise ValueError("exponents must be non-negative")
    if e > _EXP_HARD_LIMIT:
        raise ValueError(f"exponent {e} exceeds the 32-bit overflow guard")
    return e


class Monomial:
    """A power product, stored as an exponent tuple."""

    __slots__ = ("exponents", "total_degree")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(_check_exponent(e) for e in exponents)
        self.exponents = exps
        self.total_degree = sum(exps)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(operator.add, self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def quotient_by(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def power(self, k: int) -> "Monomial":
        k = int(k)
        if k < 0:
            raise ValueError("negative monomial power")
        return Monomial(tuple(_check_exponent(e * k) for e in self.exponents))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and other.exponents == self.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Monomial{self.exponents}"


class MonomialOrder:
    """Integer-key encoding of grevlex or lex.

    ``key`` maps an exponent tuple to a tuple compared ascending: larger key
    means larger monomial.  Multiplying monomials adds keys componentwise in
    both encodings, and for grevlex divisibility and lcm read directly off
    the negated exponent slots.
    """

    __slots__ = ("kind",)

    def __init__(self, kind: str = GREVLEX):
        if kind not in (GREVLEX, LEX):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind

    # -- encoding -----------------------------------------------------------

    def key(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        if self.kind == GREVLEX:
            return (sum(exps),) + tuple(-e for e in reversed(exps))
        return tuple(exps)

    def exponents_of(self, key: tuple[int, ...], n: int) -> tuple[int, ...]:
        if self.kind == GREVLEX:
            return tuple(-e for e in reversed(key[1:]))
        return tuple(key)

    def key_one(self, n: int) -> tuple[int, ...]:
        if self.kind == GREVLEX:
            return (0,) * (n + 1)
        return (0,) * n

    # -- arithmetic on keys -------------------------------------------------

    @staticmethod
    def key_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(map(operator.add, a, b))

    def key_divides(self, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        """Does the monomial of ``a`` divide the monomial of ``b``?"""
        if self.kind == GREVLEX:
            # exponent slots are negated, so divisibility flips
            return all(x >= y for x, y in zip(a[1:], b[1:]))
        return all(x <= y for x, y in zip(a, b))

    @staticmethod
    def key_quotient(b: tuple[int, ...], a: tuple[int, ...]) -> tuple[int, ...]:
        """Key of monomial(b) / monomial(a); caller checks divisibility."""
        return tuple(map(operator.sub, b, a))

    def key_lcm(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        if self.kind == GREVLEX:
            mids = tuple(min(x, y) for x, y in zip(a[1:], b[1:]))
            return (-sum(mids),) + mids
        return tuple(max(x, y) for x, y in zip(a, b))

    def key_degree(self, key: tuple[int, ...]) -> int:
        if self.kind == GREVLEX:
            return key[0]
        return sum(key)

    def key_scale(self, key: tuple[int, ...], q: int) -> tuple[int, ...]:
        scaled = tuple(c * q for c in key)
        for c in scaled:
            if c > _EXP_HARD_LIMIT or c < -_EXP_HARD_LIMIT:
                raise ValueError("exponent overflow while scaling monomial")
        return scaled

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self) -> int:
        return hash(("MonomialOrder", self.kind))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind!r})"


# -- module term keys: ring key + (-position,) ------------------------------

def module_key(key: tuple[int, ...], pos: int) -> tuple[int, ...]:
    return key + (-pos,)


def module_key_position(mkey: tuple[int, ...]) -> int:
    return -mkey[-1]


def module_key_monomial(mkey: tuple[int, ...]) -> tuple[int, ...]:
    return mkey[:-1]


# -- shared term-list primitives --------------------------------------------
# A term list is a list of (key, coeff) sorted strictly descending by key
# with nonzero coefficients.  The same helpers serve ring and module keys.

def merge_terms(a: list, b: list, p: int) -> list:
    if not a:
        return list(b)
    if not b:
        return list(a)
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ka, ca = a[i]
        kb, cb = b[j]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            out.append(b[j])
            j += 1
        else:
            c = (ca + cb) % p
            if c:
                out.append((ka, c))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return out


def scale_terms(terms: list, c: int, p: int) -> list:
    c %= p
    if c == 0:
        return []
    if c == 1:
        return list(terms)
    return [(k, (cf * c) % p) for k, cf in terms]


def shift_terms(terms: list, key: tuple[int, ...], c: int, p: int) -> list:
    """Multiply a term list by the single term (key, c).

    ``key`` must already live in the same key space as the terms (a module
    term list takes a ring key padded with a trailing 0).
    """
    c %= p
    if c == 0:
        return []
    if c == 1:
        return [(tuple(map(operator.add, k, key)), cf) for k, cf in terms]
    return [(tuple(map(operator.add, k, key)), (cf * c) % p) for k, cf in terms]


class PolyRing:
    """S = F_p[x_1, ..., x_n] with a fixed monomial order."""

    __slots__ = ("field", "variables", "order", "n", "_var_index")

    def __init__(self, p: int | FieldContext, variables: Iterable[str],
                 order: str | MonomialOrder = GREVLEX):
        self.field = p if isinstance(p, FieldContext) else FieldContext(p)
        names = tuple(variables)
        if not names:
            raise ValueError("at least one variable is required")
        if len(names) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables are supported")
        for name in names:
            if not isinstance(name, str) or _NAME_RE.fullmatch(name) is None:
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.variables = names
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder(order)
        self.n = len(names)
        self._var_index = {name: i for i, name in enumerate(names)}

    @property
    def p(self) -> int:
        return self.field.p

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        if c == 0:
            return self.zero()
        return Polynomial(self, ((self.order.key_one(self.n), c),))

    def variable(self, name: str) -> "Polynomial":
        i = self._var_index.get(name)
        if i is None:
            raise ValueError(f"unknown variable {name!r}")
        exps = tuple(1 if j == i else 0 for j in range(self.n))
        return self.term(Monomial(exps), 1)

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.variable(name) for name in self.variables)

    def term(self, mono: Monomial, coeff: int) -> "Polynomial":
        if len(mono.exponents) != self.n:
            raise ValueError("monomial arity does not match the ring")
        coeff %= self.p
        if coeff == 0:
            return self.zero()
        return Polynomial(self, ((self.order.key(mono.exponents), coeff),))

    def from_terms(self, pairs: Iterable[tuple[Monomial, int]]) -> "Polynomial":
        acc: dict[tuple[int, ...], int] = {}
        for mono, coeff in pairs:
            if len(mono.exponents) != self.n:
                raise ValueError("monomial arity does not match the ring")
            key = self.order.key(mono.exponents)
            acc[key] = (acc.get(key, 0) + coeff) % self.p
        terms = tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True))
        return Polynomial(self, terms)

    def poly(self, value) -> "Polynomial":
        """Coerce a string, int, or Polynomial into this ring."""
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        if isinstance(value, int):
            return self.constant(value)
        if isinstance(value, str):
            return poly_parse(self, value)
        raise TypeError(f"cannot coerce {value!r} to a polynomial")

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyRing)
                and other.field == self.field
                and other.variables == self.variables
                and other.order == self.order)

    def __hash__(self) -> int:
        return hash((self.field, self.variables, self.order))

    def __repr__(self) -> str:
        return f"PolyRing(p={self.p}, variables={self.variables}, order={self.order.kind})"


class Polynomial:
    """Immutable element of a PolyRing."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        # terms must be sorted strictly descending with nonzero coefficients;
        # constructors in PolyRing and the arithmetic below maintain this.
        self.ring = ring
        self._terms = tuple(terms)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        order, n = self.ring.order, self.ring.n
        for key, coeff in self._terms:
            yield Monomial(order.exponents_of(key, n)), coeff

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        key, coeff = self._terms[0]
        return Monomial(self.ring.order.exponents_of(key, self.ring.n)), coeff

    def total_degree(self) -> int | None:
        """Maximum term degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        order = self.ring.order
        return max(order.key_degree(k) for k, _ in self._terms)

    def homogeneous_degree(self) -> int | None:
        """Common term degree, or None if inhomogeneous or zero."""
        if not self._terms:
            return None
        order = self.ring.order
        degs = {order.key_degree(k) for k, _ in self._terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return not self._terms or self.homogeneous_degree() is not None

    def is_constant(self) -> bool:
        if not self._terms:
            return True
        return len(self._terms) == 1 and self.ring.order.key_degree(self._terms[0][0]) == 0

    def constant_value(self) -> int:
        """Coefficient of the monomial 1."""
        one = self.ring.order.key_one(self.ring.n)
        for key, coeff in reversed(self._terms):
            if key == one:
                return coeff
            if key > one:
                break
        return 0

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            raise ValueError("operands belong to different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        return Polynomial(self.ring, tuple(merge_terms(list(self._terms), list(other._terms), self.ring.p)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        negated = scale_terms(list(other._terms), self.ring.p - 1, self.ring.p)
        return Polynomial(self.ring, tuple(merge_terms(list(self._terms), negated, self.ring.p)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple(scale_terms(list(self._terms), self.ring.p - 1, self.ring.p)))

    def scaled(self, c: int) -> "Polynomial":
        return Polynomial(self.ring, tuple(scale_terms(list(self._terms), c, self.ring.p)))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._same_ring(other)
        return poly_mul(self, other)

    def __pow__(self, k: int) -> "Polynomial":
        k = int(k)
        if k < 0:
            raise ValueError("negative polynomial power")
        if k > MAX_EXPONENT:
            raise ValueError(f"exponent {k} exceeds the limit {MAX_EXPONENT}")
        if k == 0:
            return self.ring.one()
        if len(self._terms) == 1:
            key, coeff = self._terms[0]
            return Polynomial(self.ring, ((self.ring.order.key_scale(key, k),
                                           pow(coeff, k, self.ring.p)),))
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def qpower(self, e: int, p_power: int | None = None) -> "Polynomial":
        return poly_qpower(self, e, p_power)

    # -- equality and display -------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial)
                and other.ring == self.ring
                and other._terms == self._terms)

    def __hash__(self) -> int:
        return hash((self.ring, self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        order, n, names = self.ring.order, self.ring.n, self.ring.variables
        parts = []
        for key, coeff in self._terms:
            exps = order.exponents_of(key, n)
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(coeff)] + factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self} over F_{self.ring.p}[{', '.join(self.ring.variables)}]>"


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    p = ring.p
    if not f._terms or not g._terms:
        return ring.zero()
    if len(f._terms) > len(g._terms):
        f, g = g, f
    acc: dict[tuple[int, ...], int] = {}
    gterms = g._terms
    for key_f, c_f in f._terms:
        for key_g, c_g in gterms:
            k = tuple(map(operator.add, key_f, key_g))
            acc[k] = (acc.get(k, 0) + c_f * c_g) % p
    terms = tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True))
    return Polynomial(ring, terms)


def poly_qpower(f: Polynomial, e: int, p_power: int | None = None) -> Polynomial:
    """Raise f to the q-th power for q = p^e.

    In characteristic p this is the ring map sending each term c*x^a to
    c*x^(q*a), since c^q = c on F_p.  Exponent keys scale componentwise.
    """
    e = int(e)
    if e < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    ring = f.ring
    q = p_power if p_power is not None else ring.p ** e
    if q == 1:
        return f
    order = ring.order
    terms = tuple((order.key_scale(k, q), c) for k, c in f._terms)
    return Polynomial(ring, terms)


def q_basis_decompose(f: Polynomial, e: int) -> dict[Monomial, Polynomial]:
    """Write f = sum over b of (c_b)^q * b with b running over q-restricted
    monomials (every exponent below q = p^e).

    Returns the nonzero components c_b keyed by the restricted monomial b.
    The reconstruction sum(c_b.qpower(e) * b) == f is an identity.
    """
    e = int(e)
    if e < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    ring = f.ring
    q = ring.p ** e
    order, n = ring.order, ring.n
    buckets: dict[tuple[int, ...], list] = {}
    for key, coeff in f._terms:
        exps = order.exponents_of(key, n)
        slot = tuple(a % q for a in exps)
        quot = tuple(a // q for a in exps)
        buckets.setdefault(slot, []).append((order.key(quot), coeff))
    out: dict[Monomial, Polynomial] = {}
    for slot in sorted(buckets, key=order.key, reverse=True):
        terms = tuple(sorted(buckets[slot], reverse=True))
        out[Monomial(slot)] = Polynomial(ring, terms)
    return out


# -- parser ------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("NAME", m.group(2), m.start(2)))
        else:
            tokens.append(("OP", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("END", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent for: expr := term (('+'|'-') term)*;
    term := factor ('*' factor)*; factor := atom ('^' INT)*;
    atom := INT | VAR | '(' expr ')'.

    Variable tokens are maximal identifier runs, so the longest declared
    name wins; juxtaposition is not multiplication.
    """

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, value, pos = self.peek()
        if kind != "OP" or value != op:
            raise ParseError(f"expected {op!r}, found {value or 'end of input'!r}", pos)
        self.advance()

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, value, pos = self.peek()
        if kind != "END":
            raise ParseError(f"unexpected trailing input {value!r}", pos)
        return result

    def expr(self) -> Polynomial:
        # tolerate one optional leading sign
        kind, value, _ = self.peek()
        negate = False
        if kind == "OP" and value in "+-":
            negate = value == "-"
            self.advance()
        result = self.term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "OP" and value in "+-":
                self.advance()
                rhs = self.term()
                result = result - rhs if value == "-" else result + rhs
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "OP" and value == "*":
                self.advance()
                result = result * self.factor()
            else:
                return result

    def factor(self) -> Polynomial:
        result = self.atom()
        while True:
            kind, value, _ = self.peek()
            if kind == "OP" and value == "^":
                self.advance()
                kind, value, pos = self.peek()
                if kind != "INT":
                    raise ParseError("exponent must be an integer literal", pos)
                self.advance()
                k = int(value)
                if k > MAX_EXPONENT:
                    raise ParseError(f"exponent {k} exceeds the limit {MAX_EXPONENT}", pos)
                result = result ** k
            else:
                return result

    def atom(self) -> Polynomial:
        kind, value, pos = self.peek()
        if kind == "INT":
            self.advance()
            return self.ring.constant(int(value))
        if kind == "NAME":
            self.advance()
            if value not in self.ring._var_index:
                raise ParseError(f"unknown variable {value!r}", pos)
            return self.ring.variable(value)
        if kind == "OP" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected a number, variable, or '(', found {value or 'end of input'!r}", pos)


def poly_parse(ring: PolyRing, text: str) -> Polynomial:
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    if not text.strip():
        raise ParseError("empty polynomial text")
    return _Parser(ring, text).parse()


class FreeVector:
    """Element of a free module S^rank, stored as a module-key term list."""

    __slots__ = ("ring", "rank", "_terms")

    def __init__(self, ring: PolyRing, rank: int, terms: tuple):
        self.ring = ring
        self.rank = rank
        self._terms = tuple(terms)

    @classmethod
    def zero(cls, ring: PolyRing, rank: int) -> "FreeVector":
        return cls(ring, rank, ())

    @classmethod
    def basis(cls, ring: PolyRing, rank: int, pos: int) -> "FreeVector":
        if not (0 <= pos < rank):
            raise ValueError(f"position {pos} out of range for rank {rank}")
        key = module_key(ring.order.key_one(ring.n), pos)
        return cls(ring, rank, ((key, 1),))

    @classmethod
    def from_entries(cls, ring: PolyRing, rank: int,
                     entries: Iterable[tuple[int, Polynomial]]) -> "FreeVector":
        acc: dict[tuple[int, ...], int] = {}
        for pos, poly in entries:
            if not (0 <= pos < rank):
                raise ValueError(f"position {pos} out of range for rank {rank}")
            if poly.ring != ring:
                raise ValueError("entry polynomial belongs to a different ring")
            for key, coeff in poly._terms:
                mk = module_key(key, pos)
                acc[mk] = (acc.get(mk, 0) + coeff) % ring.p
        terms = tuple(sorted(((k, c) for k, c in acc.items() if c), reverse=True))
        return cls(ring, rank, terms)

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def entries(self) -> list[tuple[int, Polynomial]]:
        """Nonzero components as (position, polynomial), positions ascending."""
        groups: dict[int, list] = {}
        for mk, coeff in self._terms:
            groups.setdefault(module_key_position(mk), []).append((mk[:-1], coeff))
        out = []
        for pos in sorted(groups):
            terms = tuple(sorted(groups[pos], reverse=True))
            out.append((pos, Polynomial(self.ring, terms)))
        return out

    def entry(self, pos: int) -> Polynomial:
        terms = tuple(sorted(((mk[:-1], c) for mk, c in self._terms
                              if module_key_position(mk) == pos), reverse=True))
        return Polynomial(self.ring, terms)

    def leading_key(self) -> tuple[int, ...]:
        if not self._terms:
            raise ValueError("the zero vector has no leading term")
        return self._terms[0][0]

    def homogeneous_degree(self, position_degrees: Iterable[int] | None = None,
                           scale: int = 1) -> int | None:
        """Common value of scale*deg(monomial) + posdeg over all terms.

        None if the terms disagree or the vector is zero.
        """
        if not self._terms:
            return None
        posdegs = list(position_degrees) if position_degrees is not None else [0] * self.rank
        order = self.ring.order
        degs = set()
        for mk, _ in self._terms:
            pos = module_key_position(mk)
            degs.add(scale * order.key_degree(mk[:-1]) + posdegs[pos])
            if len(degs) > 1:
                return None
        return degs.pop()

    # -- arithmetic ---------------------------------------------------------

    def _compatible(self, other: "FreeVector") -> None:
        if other.ring != self.ring or other.rank != self.rank:
            raise ValueError("vectors live in different free modules")

    def __add__(self, other: "FreeVector") -> "FreeVector":
        self._compatible(other)
        return FreeVector(self.ring, self.rank,
                          tuple(merge_terms(list(self._terms), list(other._terms), self.ring.p)))

    def __sub__(self, other: "FreeVector") -> "FreeVector":
        self._compatible(other)
        negated = scale_terms(list(other._terms), self.ring.p - 1, self.ring.p)
        return FreeVector(self.ring, self.rank,
                          tuple(merge_terms(list(self._terms), negated, self.ring.p)))

    def __neg__(self) -> "FreeVector":
        return FreeVector(self.ring, self.rank,
                          tuple(scale_terms(list(self._terms), self.ring.p - 1, self.ring.p)))

    def scaled(self, c: int) -> "FreeVector":
        return FreeVector(self.ring, self.rank, tuple(scale_terms(list(self._terms), c, self.ring.p)))

    def poly_mul(self, f: Polynomial) -> "FreeVector":
        if f.ring != self.ring:
            raise ValueError("polynomial belongs to a different ring")
        p = self.ring.p
        acc: list = []
        for key, coeff in f._terms:
            padded = key + (0,)
            acc = merge_terms(acc, shift_terms(list(self._terms), padded, coeff, p), p)
        return FreeVector(self.ring, self.rank, tuple(acc))

    def mono_shift(self, key: tuple[int, ...], coeff: int) -> "FreeVector":
        """Multiply by a single ring term given by its ring key."""
        padded = key + (0,)
        return FreeVector(self.ring, self.rank,
                          tuple(shift_terms(list(self._terms), padded, coeff, self.ring.p)))

    # -- reshaping ----------------------------------------------------------

    def project(self, start: int, count: int) -> "FreeVector":
        """Keep positions [start, start+count) and renumber from zero."""
        terms = []
        for mk, coeff in self._terms:
            pos = module_key_position(mk)
            if start <= pos < start + count:
                terms.append((module_key(mk[:-1], pos - start), coeff))
        terms.sort(reverse=True)
        return FreeVector(self.ring, count, tuple(terms))

    def embed(self, offset: int, new_rank: int) -> "FreeVector":
        """View inside a larger free module, positions shifted by offset."""
        if offset + self.rank > new_rank:
            raise ValueError("embedding does not fit in the target rank")
        terms = [(module_key(mk[:-1], module_key_position(mk) + offset), c)
                 for mk, c in self._terms]
        terms.sort(reverse=True)
        return FreeVector(self.ring, new_rank, tuple(terms))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FreeVector)
                and other.ring == self.ring
                and other.rank == self.rank
                and other._terms == self._terms)

    def __hash__(self) -> int:
        return hash((self.ring, self.rank, self._terms))

    def __repr__(self) -> str:
        body = ", ".join(f"{pos}: {poly}" for pos, poly in self.entries()) or "0"
        return f"FreeVector(rank={self.rank}, {{{body}}})"
