"""Graded pieces of top local cohomology and the Frobenius action on them.

``H^{n+1}_m(R)`` has the inverse monomials ``x**a`` (every ``a_i <= -1``) as
a basis; multiplying by a polynomial adds exponents and drops any term that
reaches a nonnegative exponent.  ``H^n_m(R/fR)_t`` is the kernel of
``f : H^{n+1}_m(R)_{t-d} -> H^{n+1}_m(R)_t`` and its Frobenius is the
restriction of ``alpha -> f**(p-1) F(alpha)``.  Since Frobenius on
``H^{n+1}_m(R)`` is injective, the kernel of the twisted map already lies
inside the kernel of multiplication by ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .ffpoly import Monomial, Poly, PrimeField, monomial_key, monomial_str
from .fpurity import INFINITE, compute_me
from .frobenius import test_ideal
from .gradedla import Ideal, colon_space, nullspace, rank
from .limits import check_dim

InverseMonomial = tuple[int, ...]


@dataclass(frozen=True)
class LocalCohElement:
    """Homogeneous element of ``H^{n+1}_m(R)``: inverse monomial -> coefficient."""

    field: PrimeField
    nvars: int
    terms: dict[InverseMonomial, int]
    degree: int

    def __post_init__(self):
        for m in self.terms:
            if len(m) != self.nvars or any(a > -1 for a in m):
                raise ValueError(f"{m} is not an inverse monomial")
            if sum(m) != self.degree:
                raise ValueError("element is not homogeneous")

    @classmethod
    def from_terms(cls, field, nvars, terms, degree=None):
        p = field.p
        clean = {tuple(m): c % p for m, c in dict(terms).items() if c % p}
        if degree is None:
            if not clean:
                raise ValueError("degree of the zero element must be given")
            degree = sum(next(iter(clean)))
        return cls(field, nvars, clean, degree)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda a: monomial_key(tuple(-x for x in a))):
            c = self.terms[m]
            body = "1/(" + monomial_str(tuple(-a for a in m)) + ")"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


@dataclass(frozen=True, eq=False)
class GradedMapMatrix:
    source_degree: int
    target_degree: int
    source_basis: tuple[InverseMonomial, ...]
    target_basis: tuple[InverseMonomial, ...]
    matrix: np.ndarray
    field: PrimeField

    @property
    def nullity(self) -> int:
        if not self.source_basis:
            return 0
        if not self.target_basis:
            return len(self.source_basis)
        return len(self.source_basis) - rank(self.matrix, self.field.p)

    @property
    def rank(self) -> int:
        return len(self.source_basis) - self.nullity

    def kernel(self) -> list[LocalCohElement]:
        if not self.source_basis:
            return []
        if not self.target_basis:
            vecs = np.eye(len(self.source_basis), dtype=np.int64)
        else:
            vecs = nullspace(self.matrix, self.field.p)
        nvars = len(self.source_basis[0])
        return [LocalCohElement.from_terms(
                    self.field, nvars,
                    {self.source_basis[j]: int(v[j]) for j in np.flatnonzero(v)},
                    self.source_degree)
                for v in vecs]


def h_top_basis(n: int, t: int) -> list[InverseMonomial]:
    """Inverse monomials of degree ``t`` in ``n+1`` variables; ``C(-t-1, n)`` of them."""
    if t > -(n + 1):
        return []
    check_dim(comb(-t - 1, n), f"H^(n+1)_{t}")
    # x**a <-> x**(-a - 1) with -a - 1 >= 0 of degree -t - (n+1)
    nvars = n + 1
    shifted = -t - nvars
    out = []

    def rec(prefix, remaining, k):
        if k == nvars - 1:
            out.append(tuple(-(b + 1) for b in prefix + [remaining]))
            return
        for b in range(remaining + 1):
            prefix.append(b)
            rec(prefix, remaining - b, k + 1)
            prefix.pop()

    rec([], shifted, 0)
    return out


def multiply_by_poly(alpha: LocalCohElement, h: Poly) -> LocalCohElement:
    """``h * alpha``; terms reaching a nonnegative exponent vanish."""
    if h.nvars != alpha.nvars or h.field != alpha.field:
        raise ValueError("element and polynomial live in different rings")
    if not h.is_homogeneous():
        raise ValueError("h must be homogeneous")
    p = alpha.field.p
    out: dict[InverseMonomial, int] = {}
    for a, c in alpha.terms.items():
        for u, cu in h.items():
            m = tuple(x + y for x, y in zip(a, u))
            if all(x <= -1 for x in m):
                out[m] = (out.get(m, 0) + c * cu) % p
    deg = alpha.degree + max(h.degree(), 0)
    return LocalCohElement(alpha.field, alpha.nvars, {m: c for m, c in out.items() if c}, deg)


def frobenius(alpha: LocalCohElement) -> LocalCohElement:
    """Plain Frobenius: exponents times p, coefficients of F_p fixed."""
    p = alpha.field.p
    return LocalCohElement(alpha.field, alpha.nvars,
                           {tuple(p * a for a in m): c for m, c in alpha.terms.items()},
                           p * alpha.degree)


def _map_matrix(field, source, target, image_of) -> np.ndarray:
    index = {m: i for i, m in enumerate(target)}
    A = np.zeros((len(target), len(source)), dtype=np.int64)
    for j, a in enumerate(source):
        for m, c in image_of(a).items():
            A[index[m], j] = (A[index[m], j] + c) % field.p
    return A


def _times(a: InverseMonomial, h: Poly) -> dict[InverseMonomial, int]:
    out: dict[InverseMonomial, int] = {}
    for u, c in h.items():
        m = tuple(x + y for x, y in zip(a, u))
        if all(x <= -1 for x in m):
            out[m] = (out.get(m, 0) + c) % h.field.p
    return out


def multiplication_matrix(h: Poly, s: int) -> GradedMapMatrix:
    """Matrix of ``h* : H^{n+1}_s -> H^{n+1}_{s + deg h}``."""
    n = h.nvars - 1
    t = s + h.degree()
    source = h_top_basis(n, s)
    target = h_top_basis(n, t)
    A = _map_matrix(h.field, source, target, lambda a: _times(a, h))
    return GradedMapMatrix(s, t, tuple(source), tuple(target), A, h.field)


def hn_piece_dim(f: Poly, t: int) -> int:
    """``dim H^n_m(R/fR)_t`` as the nullity of ``f* : H^{n+1}_{t-d} -> H^{n+1}_t``."""
    return multiplication_matrix(f, t - f.degree()).nullity


def frobenius_twisted_matrix(f: Poly, s: int) -> GradedMapMatrix:
    """Matrix of ``alpha -> f**(p-1) F(alpha)`` from degree ``s`` to ``p s + d(p-1)``."""
    p = f.field.p
    n = f.nvars - 1
    twist = f ** (p - 1)
    t = p * s + f.degree() * (p - 1)
    source = h_top_basis(n, s)
    target = h_top_basis(n, t)
    A = _map_matrix(f.field, source, target,
                    lambda a: _times(tuple(p * x for x in a), twist))
    return GradedMapMatrix(s, t, tuple(source), tuple(target), A, f.field)


def frobenius_kernel_dim_direct(f: Poly, t: int) -> int:
    """``dim ker(F on H^n_m(R/fR)_t)`` from the twisted Frobenius on ``H^{n+1}``."""
    return frobenius_twisted_matrix(f, t - f.degree()).nullity


def representation_level(p: int, n: int, s: int) -> int:
    """Least ``e >= 1`` with ``p**e >= -s - n``.

    Every inverse monomial of degree ``s`` then has all exponents at least
    ``-p**e``, so a class can be written ``[g / (x0...xn)**(p**e)]``.
    """
    e = 1
    while p**e < -s - n:
        e += 1
    return e


def frobenius_kernel_dim_colon(f: Poly, t: int, tau: Ideal | None = None,
                               cross_check: bool = True) -> int:
    """Same kernel dimension via ``g in (m^[e] : tau(f**(1-1/p)))``.

    With ``cross_check`` the count is repeated one level higher and the two
    must agree.
    """
    p = f.field.p
    n = f.nvars - 1
    s = t - f.degree()
    if tau is None:
        tau = test_ideal(f, 1)
    e = representation_level(p, n, s)
    dim = colon_space(e, tau, s + (n + 1) * p**e).dim
    if cross_check:
        again = colon_space(e + 1, tau, s + (n + 1) * p ** (e + 1)).dim
        if again != dim:
            raise AssertionError(f"colon kernel differs between levels {e} and {e + 1}")
    return dim


def witness_non_injectivity(f: Poly, e: int, tau: Ideal | None = None
                            ) -> tuple[LocalCohElement, int]:
    """Nonzero ``alpha`` with ``f**(p-1) F(alpha) = 0`` built from the ``M_e`` witness.

    Returns ``(alpha, t)`` where ``alpha`` sits in ``H^{n+1}_m(R)`` of degree
    ``t - d``, i.e. it represents a class of ``H^n_m(R/fR)_t``.
    """
    if tau is None:
        tau = test_ideal(f, 1)
    report = compute_me(f, e, tau)
    if report.me == INFINITE:
        raise ValueError(f"M_{e} is infinite: tau is the unit ideal, nothing to witness")
    p = f.field.p
    n = f.nvars - 1
    q = p**e
    r = report.witness
    alpha = LocalCohElement.from_terms(
        f.field, f.nvars, {tuple(a - q for a in m): c for m, c in r.items()},
        report.me - (n + 1) * q)
    t = report.normalized + f.degree()
    if alpha.is_zero():
        raise AssertionError("witness class vanished")
    image = multiply_by_poly(frobenius(alpha), f ** (p - 1))
    if not image.is_zero():
        raise AssertionError("witness is not killed by the twisted Frobenius")
    if not multiply_by_poly(alpha, f).is_zero():
        raise AssertionError("witness does not lie in H^n_m(R/fR)")
    return alpha, t


def multiplication_is_surjective(f: Poly, t: int) -> bool:
    """``f* : H^{n+1}_{t-d} -> H^{n+1}_t`` has full row rank."""
    M = multiplication_matrix(f, t - f.degree())
    return M.rank == len(M.target_basis)


def plain_frobenius_injective(n: int, s: int, p: int) -> bool:
    """Exponent scaling sends the degree-``s`` basis to distinct basis elements."""
    basis = h_top_basis(n, s)
    images = {tuple(p * a for a in m) for m in basis}
    return len(images) == len(basis)
