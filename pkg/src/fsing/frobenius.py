"""Frobenius root decompositions and test ideals of ``f**(1 - 1/p**e)``.

Over F_p the monomials ``x**i`` with every exponent below ``p**e`` form a
basis of ``R`` over ``R**(p**e)``.  Writing ``f**(p**e - 1)`` in that basis
gives root polynomials; they generate the test ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .ffpoly import Monomial, Poly, monomial_key, poly_pow
from .gradedla import Ideal, frobenius_power_ideal, membership
from .limits import ResourceLimitError


@dataclass(frozen=True)
class FrobeniusDecomposition:
    """``g = sum(root**(p**e) * x**residue for residue, root in roots.items())``."""

    e: int
    roots: dict[Monomial, Poly]

    def reassemble(self) -> Poly:
        items = iter(self.roots.items())
        first = next(items, None)
        if first is None:
            raise ValueError("empty decomposition has no ring to reassemble in")
        res, root = first
        total = root.frobenius(self.e).shift(res)
        for res, root in items:
            total = total + root.frobenius(self.e).shift(res)
        return total

    def residues(self) -> list[Monomial]:
        return sorted(self.roots, key=monomial_key)


def peth_root_decompose(g: Poly, e: int) -> FrobeniusDecomposition:
    """Split each exponent as ``p**e * quotient + residue``.

    Coefficients are copied unchanged: every element of F_p is its own
    ``p**e``-th root.
    """
    if e < 1:
        raise ValueError("level e must be at least 1")
    q = g.field.p ** e
    buckets: dict[Monomial, dict[Monomial, int]] = {}
    for m, c in g.items():
        quo, res = zip(*(divmod(a, q) for a in m))
        buckets.setdefault(res, {})[quo] = c
    roots = {res: Poly(g.field, g.nvars, terms) for res, terms in buckets.items()}
    return FrobeniusDecomposition(e, {r: f for r, f in roots.items() if f})


def _check_input(f: Poly):
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("f must be a nonzero homogeneous polynomial")


def test_ideal(f: Poly, e: int = 1) -> Ideal:
    """``tau(f**(1 - 1/p**e))``, generated by the roots of ``f**(p**e - 1)``."""
    _check_input(f)
    if e < 1:
        raise ValueError("level e must be at least 1")
    power = poly_pow(f, f.field.p ** e - 1)
    dec = peth_root_decompose(power, e)
    ideal = Ideal(dec.roots.values(), f.nvars, f.field).minimalized()
    return Ideal(ideal.sorted_generators(), f.nvars, f.field)


# pytest would otherwise try to collect the name above as a test
test_ideal.__test__ = False


def verify_test_ideal_definition(f: Poly, e: int, a: Ideal) -> bool:
    """``f**(p**e - 1) in a^[e]``."""
    power = poly_pow(f, f.field.p ** e - 1)
    return membership(power, frobenius_power_ideal(a, e))


def fedder_not_f_pure_at_m(f: Poly) -> bool:
    """Fedder's criterion at the origin: ``f**(p-1) in (x0**p, ..., xn**p)``."""
    _check_input(f)
    p = f.field.p
    return all(any(a >= p for a in m) for m, _ in poly_pow(f, p - 1).items())


class SigmaStatus(str, Enum):
    STABILIZED = "Stabilized"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class SigmaEstimate:
    ideal: Ideal
    status: SigmaStatus
    levels: tuple[Ideal, ...]
    guard_hit: bool = False


def non_f_pure_ideal_estimate(f: Poly, e_max: int = 4) -> SigmaEstimate:
    """Approximate the non-F-pure ideal by ``tau(f**(1 - 1/p**e))`` for growing e.

    The status is Stabilized as soon as two consecutive levels agree; this
    is a heuristic, no effective bound on the needed level is known.
    """
    _check_input(f)
    if e_max < 2:
        raise ValueError("e_max must be at least 2")
    levels: list[Ideal] = []
    guard_hit = False
    for e in range(1, e_max + 1):
        try:
            tau = test_ideal(f, e)
        except ResourceLimitError:
            guard_hit = True
            break
        levels.append(tau)
        if len(levels) >= 2 and levels[-1] == levels[-2]:
            return SigmaEstimate(tau, SigmaStatus.STABILIZED, tuple(levels))
    if not levels:
        raise ResourceLimitError("could not compute even the first test ideal")
    return SigmaEstimate(levels[-1], SigmaStatus.UNSTABLE, tuple(levels), guard_hit)
