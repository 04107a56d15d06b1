"""Degree-by-degree exact linear algebra over F_p.

Every ideal question in this package is answered one graded piece at a time:
a homogeneous ideal ``I`` gives the subspace ``I_t`` of ``R_t`` spanned by
``g * m`` for generators ``g`` and monomials ``m``, and the colon ideals
needed against ``m^[e]`` become kernels of multiplication maps on the
Artinian quotient ``R/m^[e]``, whose degree pieces have the box-monomial
basis (all exponents below ``p**e``).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .ffpoly import Monomial, Poly, PrimeField, monomial_key
from .limits import check_dim


# --------------------------------------------------------------------------
# row reduction mod p

def rref(matrix, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.  Pivot
    columns are taken left to right, so the result depends only on the row
    space and the column order.
    """
    M = np.array(matrix, dtype=np.int64) % p
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        lead = int(M[r, c])
        if lead != 1:
            M[r] = M[r] * pow(lead, -1, p) % p
        col = M[:, c].copy()
        col[r] = 0
        targets = np.flatnonzero(col)
        if targets.size:
            support = np.flatnonzero(M[r])
            block = np.ix_(targets, support)
            M[block] = (M[block] - np.outer(col[targets], M[r, support])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(matrix, p: int) -> int:
    M = np.asarray(matrix)
    if M.size == 0:
        return 0
    return len(rref(M, p)[1])


def nullspace(matrix, p: int) -> np.ndarray:
    """Basis (rows, reduced echelon form) of ``{v : matrix @ v = 0}``."""
    M = np.asarray(matrix, dtype=np.int64)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = rref(M, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    if not free:
        return np.zeros((0, ncols), dtype=np.int64)
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-R[i, fc]) % p
    return rref(basis, p)[0]


# --------------------------------------------------------------------------
# monomial bases

def monomials_of_degree(n: int, t: int, cap: int | None = None) -> list[Monomial]:
    """All monomials of degree ``t`` in ``x0..xn`` in descending graded-lex order.

    With ``cap`` every exponent is at most ``cap``.
    """
    if t < 0:
        return []
    nvars = n + 1
    if cap is None:
        check_dim(comb(t + n, n), f"R_{t}")
    else:
        check_dim(min(comb(t + n, n), (cap + 1) ** nvars), f"R_{t} box")
    hi = t if cap is None else min(t, cap)
    out: list[Monomial] = []

    def rec(prefix, remaining, k):
        if k == nvars - 1:
            if cap is None or remaining <= cap:
                out.append(tuple(prefix) + (remaining,))
            return
        top = min(remaining, hi)
        rest_cap = (nvars - 1 - k) * hi if cap is not None else remaining
        for a in range(top, -1, -1):
            if remaining - a > rest_cap:
                break
            prefix.append(a)
            rec(prefix, remaining - a, k + 1)
            prefix.pop()

    rec([], t, 0)
    return out


def box_monomials(n: int, e: int, p: int, t: int) -> list[Monomial]:
    """Basis of ``(R/m^[e])_t``: degree-t monomials with exponents below ``p**e``."""
    q = p**e
    check_dim(q ** (n + 1), f"box (p^e)^(n+1) for e={e}")
    return monomials_of_degree(n, t, cap=q - 1)


# --------------------------------------------------------------------------
# subspaces of graded pieces

@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """A subspace of a graded piece, stored as reduced rows over an ordered basis."""

    degree: int
    basis: tuple[Monomial, ...]
    rows: np.ndarray
    pivots: tuple[int, ...]
    field: PrimeField

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    @property
    def ambient_dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def coordinates(self, h: Poly) -> np.ndarray:
        index = {m: i for i, m in enumerate(self.basis)}
        vec = np.zeros(len(self.basis), dtype=np.int64)
        for m, c in h.items():
            if m not in index:
                raise ValueError(f"monomial {m} is not in the ambient basis")
            vec[index[m]] = c
        return vec

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        """Remainder of ``vec`` after clearing every pivot column."""
        p = self.field.p
        v = np.asarray(vec, dtype=np.int64) % p
        for i, c in enumerate(self.pivots):
            if v[c]:
                v = (v - v[c] * self.rows[i]) % p
        return v

    def contains_vector(self, vec) -> bool:
        return not self.reduce(vec).any()

    def poly(self, i: int) -> Poly:
        """Row ``i`` as a polynomial."""
        row = self.rows[i]
        nvars = len(self.basis[0]) if self.basis else 0
        return Poly(self.field, nvars,
                    {self.basis[j]: int(row[j]) for j in np.flatnonzero(row)})

    def polys(self) -> list[Poly]:
        return [self.poly(i) for i in range(self.dim)]


def _span(field: PrimeField, degree: int, basis: Sequence[Monomial],
          vectors: Iterable[dict[Monomial, int]]) -> SubspaceBasis:
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for vec in vectors:
        row = np.zeros(len(basis), dtype=np.int64)
        for m, c in vec.items():
            row[index[m]] = c
        rows.append(row)
    if rows:
        R, piv = rref(np.array(rows), field.p)
    else:
        R, piv = np.zeros((0, len(basis)), dtype=np.int64), []
    return SubspaceBasis(degree, tuple(basis), R, tuple(piv), field)


# --------------------------------------------------------------------------
# ideals

class Ideal:
    """Homogeneous ideal of ``F_p[x0..xn]`` given by generators.

    Zero generators are dropped.  Degree pieces are cached per instance;
    recomputing a piece always gives the same reduced basis, so the cache
    is safe to populate from several threads.
    """

    def __init__(self, generators: Iterable[Poly], nvars: int | None = None,
                 field: PrimeField | None = None):
        gens = [g for g in generators]
        if gens:
            nvars = gens[0].nvars if nvars is None else nvars
            field = gens[0].field if field is None else field
        if nvars is None or field is None:
            raise ValueError("an ideal without generators needs nvars and field")
        kept = []
        seen = set()
        for g in gens:
            if g.nvars != nvars or g.field != field:
                raise ValueError("generator lives in a different ring")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            if g and g not in seen:
                seen.add(g)
                kept.append(g)
        self.generators: tuple[Poly, ...] = tuple(kept)
        self.nvars = nvars
        self.field = field
        self._pieces: dict[int, SubspaceBasis] = {}

    # constructors
    @classmethod
    def maximal(cls, field: PrimeField, nvars: int) -> "Ideal":
        return cls([Poly.variable(field, nvars, i) for i in range(nvars)])

    @classmethod
    def maximal_power(cls, field: PrimeField, nvars: int, ell: int) -> "Ideal":
        return cls([Poly.monomial(field, m) for m in monomials_of_degree(nvars - 1, ell)],
                   nvars, field)

    @classmethod
    def unit(cls, field: PrimeField, nvars: int) -> "Ideal":
        return cls([Poly.constant(field, nvars, 1)])

    @classmethod
    def from_monomials(cls, field: PrimeField, monomials: Iterable[Monomial]) -> "Ideal":
        return cls([Poly.monomial(field, m) for m in monomials])

    @property
    def n(self) -> int:
        return self.nvars - 1

    def is_unit(self) -> bool:
        return any(g.degree() == 0 for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def sorted_generators(self) -> list[Poly]:
        return sorted(self.generators,
                      key=lambda g: (g.degree(), [monomial_key(m) for m in g.monomials()]))

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + other.generators, self.nvars, self.field)

    def __contains__(self, h: Poly) -> bool:
        return membership(h, self)

    def __le__(self, other: "Ideal") -> bool:
        return all(g in other for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self <= other and other <= self

    __hash__ = None

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.sorted_generators()) + ")"

    def __repr__(self):
        return f"Ideal{self}"

    def minimalized(self) -> "Ideal":
        """Same ideal with a canonical minimal generating set.

        Degree by degree, the new generators are the reduced echelon rows
        whose pivots are not already pivots of the part generated in lower
        degrees.  The result depends only on the ideal.
        """
        if self.is_unit():
            return Ideal.unit(self.field, self.nvars)
        kept: list[Poly] = []
        for t in sorted({g.degree() for g in self.generators}):
            lower = Ideal(kept, self.nvars, self.field)
            old = ideal_degree_piece(lower, t)
            new = [g.terms for g in self.generators if g.degree() == t]
            rows = [old.poly(i).terms for i in range(old.dim)] + new
            both = _span(self.field, t, old.basis, rows)
            fresh = set(both.pivots) - set(old.pivots)
            kept += [both.poly(i) for i, c in enumerate(both.pivots) if c in fresh]
        return Ideal(kept, self.nvars, self.field)

    def degree_piece(self, t: int) -> SubspaceBasis:
        piece = self._pieces.get(t)
        if piece is None:
            piece = self._pieces[t] = ideal_degree_piece(self, t)
        return piece


def frobenius_power_ideal(ideal: Ideal, e: int) -> Ideal:
    """``I^[e]``: generated by the ``p**e``-th powers of the generators."""
    if e == 0:
        return ideal
    return Ideal([g.frobenius(e) for g in ideal.generators], ideal.nvars, ideal.field)


def ideal_degree_piece(ideal: Ideal, t: int) -> SubspaceBasis:
    """Reduced basis of ``I_t`` inside ``R_t`` (graded-lex ordered monomials)."""
    basis = monomials_of_degree(ideal.n, t)

    def spanning():
        for g in ideal.generators:
            dg = g.degree()
            if dg > t:
                continue
            for m in monomials_of_degree(ideal.n, t - dg):
                yield g.shift(m).terms

    return _span(ideal.field, t, basis, spanning())


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def membership(h: Poly, ideal: Ideal) -> bool:
    """Decide ``h in I`` for homogeneous ``h``."""
    if h.is_zero():
        return True
    if not h.is_homogeneous():
        raise ValueError("membership is only decided for homogeneous polynomials")
    if ideal.is_zero():
        return False
    if ideal.is_unit():
        return True
    if ideal.is_monomial():
        gens = [g.leading_monomial() for g in ideal.generators]
        return all(any(_divides(u, m) for u in gens) for m, _ in h.items())
    piece = ideal.degree_piece(h.degree())
    return piece.contains_vector(piece.coordinates(h))


def quotient_dim(ideal: Ideal, t: int) -> int:
    """``dim (R/I)_t``."""
    if t < 0:
        return 0
    total = comb(t + ideal.n, ideal.n)
    if ideal.is_monomial():
        gens = [g.leading_monomial() for g in ideal.generators]
        return sum(1 for m in monomials_of_degree(ideal.n, t)
                   if not any(_divides(u, m) for u in gens))
    return total - ideal.degree_piece(t).dim


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """``small`` is a subset of ``big`` (generator-wise membership)."""
    return small <= big


def ideals_equal(a: Ideal, b: Ideal) -> bool:
    return a == b


# --------------------------------------------------------------------------
# colon spaces against Frobenius powers of the maximal ideal

def colon_space(e: int, J: Ideal, t: int) -> SubspaceBasis:
    """Degree-t part of ``(m^[e] : J) / m^[e]``.

    Ambient basis: box monomials of degree ``t``.  A vector ``g`` is in the
    result iff ``g*h`` vanishes in ``R/m^[e]`` for every generator ``h``.
    """
    p = J.field.p
    q = p**e
    basis = box_monomials(J.n, e, p, t)
    field = J.field
    empty = np.zeros((0, len(basis)), dtype=np.int64)
    if not basis or J.is_unit():
        return SubspaceBasis(t, tuple(basis), empty, (), field)
    if J.is_zero():
        rows = np.eye(len(basis), dtype=np.int64)
        return SubspaceBasis(t, tuple(basis), rows, tuple(range(len(basis))), field)

    def killed(m):
        return any(a >= q for a in m)

    # a monomial generator u sends distinct monomials to distinct monomials,
    # so it only cuts the allowed support down
    mono = [g.leading_monomial() for g in J.generators if g.is_monomial()]
    other = [g for g in J.generators if not g.is_monomial()]
    allowed = [j for j, m in enumerate(basis)
               if all(killed(tuple(a + b for a, b in zip(m, u))) for u in mono)]
    if not allowed:
        return SubspaceBasis(t, tuple(basis), empty, (), field)

    if other:
        row_index: dict[tuple, int] = {}
        entries: list[tuple[int, int, int]] = []
        for col, j in enumerate(allowed):
            m = basis[j]
            for k, h in enumerate(other):
                for u, c in h.items():
                    prod = tuple(a + b for a, b in zip(m, u))
                    if killed(prod):
                        continue
                    r = row_index.setdefault((k, prod), len(row_index))
                    entries.append((r, col, c))
        A = np.zeros((len(row_index), len(allowed)), dtype=np.int64)
        for r, col, c in entries:
            A[r, col] = (A[r, col] + c) % p
        kernel = nullspace(A, p)
    else:
        kernel = np.eye(len(allowed), dtype=np.int64)

    full = np.zeros((kernel.shape[0], len(basis)), dtype=np.int64)
    full[:, allowed] = kernel
    R, piv = rref(full, p) if full.shape[0] else (empty, [])
    return SubspaceBasis(t, tuple(basis), R, tuple(piv), field)


def box_top_degree(n: int, p: int, e: int) -> int:
    """Socle degree ``(n+1)(p**e - 1)`` of ``R/m^[e]``."""
    return (n + 1) * (p**e - 1)
