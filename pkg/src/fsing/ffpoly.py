"""Prime fields and sparse multivariate polynomials over them.

Polynomials live in ``F_p[x0, ..., xn]`` and are stored as a dict mapping
exponent tuples to nonzero coefficients in ``[0, p-1]``.  Monomials are
ordered graded-lexicographically with ``x0 > x1 > ... > xn``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .limits import check_exponent, check_terms

Monomial = tuple[int, ...]


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly`; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field ``F_p``; scalars are plain ints reduced into ``[0, p-1]``."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"modulus {self.p!r} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)


def monomial_key(m: Monomial):
    """Sort key putting monomials in descending graded-lex order."""
    return (-sum(m), tuple(-a for a in m))


def monomial_str(m: Monomial) -> str:
    parts = []
    for i, a in enumerate(m):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


class Poly:
    """Sparse polynomial in ``nvars`` variables over a prime field.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("field", "nvars", "_terms", "_hash")

    def __init__(self, field: PrimeField, nvars: int,
                 terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        self.field = field
        self.nvars = nvars
        p = field.p
        clean: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars:
                raise ValueError(f"monomial {m} does not have {nvars} exponents")
            c = (clean.get(m, 0) + c) % p
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, nvars, terms):
        # trusted constructor: terms already reduced and zero-free
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field, nvars):
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, c=1):
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field, m: Monomial, c=1):
        return cls(field, len(m), {tuple(m): c})

    @classmethod
    def variable(cls, field, nvars, i):
        m = [0] * nvars
        m[i] = 1
        return cls(field, nvars, {tuple(m): 1})

    # basic queries ------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=monomial_key)

    def coeff(self, m: Monomial) -> int:
        return self._terms.get(tuple(m), 0)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        for m in self.monomials():
            yield m, self._terms[m]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_monomial(self) -> Monomial:
        return min(self._terms, key=monomial_key)

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "Poly"):
        if self.field != other.field or self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            c = (out.get(m, 0) + c) % p
            if c:
                out[m] = c
            else:
                out.pop(m, None)
        return Poly._raw(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return Poly._raw(self.field, self.nvars, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.field.p
            if c == 0:
                return Poly.zero(self.field, self.nvars)
            p = self.field.p
            return Poly._raw(self.field, self.nvars,
                             {m: a * c % p for m, a in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return poly_pow(self, k)

    def frobenius(self, e: int = 1) -> "Poly":
        """``self ** (p**e)``: coefficients of F_p are fixed, exponents scale."""
        q = self.field.p ** e
        out = {}
        for m, c in self._terms.items():
            scaled = tuple(a * q for a in m)
            for a in scaled:
                check_exponent(a)
            out[scaled] = c
        return Poly._raw(self.field, self.nvars, out)

    def shift(self, m: Monomial) -> "Poly":
        """Multiply by the monomial ``x**m``."""
        return Poly._raw(self.field, self.nvars,
                         {tuple(a + b for a, b in zip(k, m)): c
                          for k, c in self._terms.items()})

    # comparison / printing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.field, self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.p, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self:
            if sum(m) == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(monomial_str(m))
            else:
                parts.append(f"{c}*{monomial_str(m)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r}, p={self.field.p}, nvars={self.nvars})"


def poly_mul(a: Poly, b: Poly) -> Poly:
    a._check(b)
    if not a._terms or not b._terms:
        return Poly.zero(a.field, a.nvars)
    p = a.field.p
    out: dict[Monomial, int] = {}
    get = out.get
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = (get(m, 0) + ca * cb) % p
        check_terms(len(out), "product")
    return Poly._raw(a.field, a.nvars, {m: c for m, c in out.items() if c})


def poly_pow(f: Poly, k: int) -> Poly:
    """Exact ``f**k``.

    ``k`` is expanded in base p: ``f**k = prod (f**(p**i))**k_i`` and each
    ``f**(p**i)`` is just an exponent scaling, so only digit powers need
    real multiplication.
    """
    if k < 0:
        raise ValueError("negative exponent")
    p = f.field.p
    result = Poly.constant(f.field, f.nvars, 1)
    if k == 0:
        return result
    if f.is_zero():
        return f
    i = 0
    while k:
        k, digit = divmod(k, p)
        if digit:
            base = f.frobenius(i) if i else f
            power = _binary_pow(base, digit)
            result = poly_mul(result, power)
        i += 1
    return result


def _binary_pow(f: Poly, k: int) -> Poly:
    result = Poly.constant(f.field, f.nvars, 1)
    base = f
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


_TOKEN = re.compile(r"(?P<num>\d+)|x(?P<var>\d+)|(?P<op>[-+*^])")


def parse_poly(text: str, n: int, field: PrimeField | int) -> Poly:
    """Parse ``"x0^2*x1 + 3*x2 - x1"`` into a polynomial in x0..xn.

    Grammar: ``poly ::= [+|-] term ((+|-) term)*``, ``term ::= factor (* factor)*``
    where a factor is a decimal coefficient or ``xK[^E]``.
    """
    if isinstance(field, int):
        field = PrimeField(field)
    nvars = n + 1
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        while text[pos].isspace():
            pos += 1
        match = _TOKEN.match(text, pos)
        if not match:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), pos))
        pos = match.end()
    tokens.append(("end", None, len(text)))

    terms: dict[Monomial, int] = {}
    i = 0

    def expect_factor(i):
        kind, val, at = tokens[i]
        if kind == "num":
            return ("num", int(val)), i + 1
        if kind == "var":
            idx = int(val)
            if idx > n:
                raise PolySyntaxError(f"variable x{idx} out of range x0..x{n}", at)
            power = 1
            if tokens[i + 1][0] == "op" and tokens[i + 1][1] == "^":
                k2, v2, at2 = tokens[i + 2]
                if k2 != "num":
                    raise PolySyntaxError("expected exponent", at2)
                power = int(v2)
                check_exponent(power)
                i += 2
            return ("var", idx, power), i + 1
        raise PolySyntaxError("expected coefficient or variable", at)

    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1
    if tokens[i][0] == "end":
        raise PolySyntaxError("empty polynomial", tokens[i][2])
    while True:
        coeff = sign
        exps = [0] * nvars
        factor, i = expect_factor(i)
        while True:
            if factor[0] == "num":
                coeff *= factor[1]
            else:
                exps[factor[1]] += factor[2]
            kind, val, at = tokens[i]
            if kind == "op" and val == "*":
                factor, i = expect_factor(i + 1)
                continue
            break
        m = tuple(exps)
        terms[m] = terms.get(m, 0) + coeff
        kind, val, at = tokens[i]
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise PolySyntaxError(f"unexpected token {val!r}", at)
    poly = Poly(field, nvars, terms)
    check_terms(len(poly))
    return poly
