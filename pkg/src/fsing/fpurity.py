"""The invariants ``e_0``, ``M_e``, ``delta(f)`` and the isolated non-F-pure verdict.

``M_e`` is the least degree of a homogeneous element of
``(m^[e] : tau) \\ m^[e]`` with ``tau = tau(f**(1 - 1/p))``.  Its normalized
value ``M_e - (n+1) p**e`` is nonincreasing in ``e``; when the non-F-pure
locus is just the origin it stabilizes at ``delta(f)``, and Frobenius then
acts injectively on ``H^n_m(R/fR)`` in all degrees below ``delta(f) + d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .ffpoly import Poly, PrimeField
from .frobenius import fedder_not_f_pure_at_m, test_ideal
from .gradedla import (Ideal, box_monomials, box_top_degree, colon_space,
                       frobenius_power_ideal, membership, quotient_dim)
from .limits import ResourceLimitError

INFINITE = math.inf


class DeltaUndeterminedError(RuntimeError):
    """``delta(f)`` could not be established, so no injectivity bound exists."""

    def __init__(self, report: "DeltaReport"):
        super().__init__(f"delta undetermined: status {report.status.value}"
                         + (f" ({report.note})" if report.note else ""))
        self.report = report


@dataclass(frozen=True)
class MeReport:
    e: int
    me: int | float
    normalized: int | None
    witness: Poly | None

    @property
    def finite(self) -> bool:
        return self.me != INFINITE


class DeltaStatus(str, Enum):
    CERTIFIED = "Certified"
    PROBABLE_STABLE = "ProbableStable"
    UNBOUNDED_DETECTED = "UnboundedDetected"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class DeltaReport:
    delta: int | None
    status: DeltaStatus
    e_used: int
    ell_min: int | float
    sequence: list[tuple[int, int]]
    me_reports: list[MeReport] = field(default_factory=list)
    note: str = ""


@dataclass(frozen=True)
class IsolatedVerdict:
    f_pure_at_m: bool
    isolated: bool
    ell_min: int | float


def _tau(f: Poly, tau: Ideal | None) -> Ideal:
    return test_ideal(f, 1) if tau is None else tau


def _outside_frobenius_power(g: Poly, q: int) -> bool:
    # m^[e] is monomial, so g escapes it iff one of its monomials does
    return any(all(a < q for a in m) for m, _ in g.items())


def e0(f: Poly, tau: Ideal | None = None) -> int:
    """Least ``e >= 0`` with ``tau(f**(1-1/p))`` not inside ``m^[e]``."""
    tau = _tau(f, tau)
    p = f.field.p
    e = 0
    while True:
        q = p**e
        if any(_outside_frobenius_power(g, q) for g in tau.generators):
            return e
        e += 1


def compute_me(f: Poly, e: int, tau: Ideal | None = None) -> MeReport:
    """``M_e`` with a witness of minimal degree.

    The degrees where ``(m^[e]:tau)/m^[e]`` is nonzero form an interval ending
    at the socle degree: ``R/m^[e]`` is Gorenstein, so any nonzero class
    below the socle has a nonzero multiple by some variable, and the colon
    is an ideal.  That makes binary search over the degree valid.
    """
    tau = _tau(f, tau)
    if e < e0(f, tau):
        raise ValueError(f"M_e is only defined for e >= e_0 = {e0(f, tau)}")
    n = f.nvars - 1
    p = f.field.p
    top = box_top_degree(n, p, e)

    def nonzero(t):
        return colon_space(e, tau, t).dim > 0

    if tau.is_unit() or not nonzero(top):
        return MeReport(e, INFINITE, None, None)
    lo, hi = 0, top
    while lo < hi:
        mid = (lo + hi) // 2
        if nonzero(mid):
            hi = mid
        else:
            lo = mid + 1
    space = colon_space(e, tau, lo)
    # rows are ordered by pivot; the last has the smallest leading monomial
    witness = space.poly(space.dim - 1)
    return MeReport(e, lo, lo - (n + 1) * p**e, witness)


def verify_me_witness(f: Poly, report: MeReport, tau: Ideal | None = None) -> bool:
    """Re-check that the witness lies in ``(m^[e]:tau)`` but not in ``m^[e]``."""
    if not report.finite:
        return report.witness is None
    tau = _tau(f, tau)
    r = report.witness
    mq = frobenius_power_ideal(Ideal.maximal(f.field, f.nvars), report.e)
    if r.degree() != report.me or membership(r, mq):
        return False
    return all(membership(r * g, mq) for g in tau.generators)


def ell_min(tau: Ideal, n: int, d: int) -> int | float:
    """Least ``l`` with ``m**l`` inside ``tau``; INFINITE if none up to the a-priori cap.

    If ``tau`` is m-primary it holds ``n+1`` generators of degree at most
    ``d-1`` forming a regular sequence, which forces ``m**D`` inside ``tau``
    for ``D = (n+1)(d-1) - n``.
    """
    cap = max(0, (n + 1) * (d - 1) - n)
    for ell in range(cap + 1):
        if quotient_dim(tau, ell) == 0:
            return ell
    return INFINITE


def isolated_non_f_pure_point(f: Poly, tau: Ideal | None = None) -> IsolatedVerdict:
    if f.degree() < 1:
        raise ValueError("f must have positive degree")
    f_pure = not fedder_not_f_pure_at_m(f)
    tau = _tau(f, tau)
    if f_pure:
        return IsolatedVerdict(True, False, 0)
    ell = ell_min(tau, f.nvars - 1, f.degree())
    return IsolatedVerdict(False, ell != INFINITE, ell)


def bs_colon_formula(field: PrimeField, nvars: int, e: int, c: int) -> Ideal:
    """``m^[e] + m**((n+1) p**e - n - c)``, which equals ``(m^[e] : m**c)``."""
    n = nvars - 1
    power = (n + 1) * field.p**e - n - c
    if power < 0:
        raise ValueError("(n+1)p^e - n - c must be nonnegative")
    mq = frobenius_power_ideal(Ideal.maximal(field, nvars), e)
    return mq + Ideal.maximal_power(field, nvars, power)


def colon_formula_matches(field: PrimeField, nvars: int, e: int, c: int) -> bool:
    """Compare :func:`bs_colon_formula` with the direct colon in every degree."""
    n = nvars - 1
    p = field.p
    power = (n + 1) * p**e - n - c
    if power < 0:
        raise ValueError("(n+1)p^e - n - c must be nonnegative")
    direct_ideal = Ideal.maximal_power(field, nvars, c)
    for t in range(box_top_degree(n, p, e) + 1):
        direct = colon_space(e, direct_ideal, t)
        box = box_monomials(n, e, p, t)
        # modulo m^[e] the formula ideal is spanned by the box monomials of
        # degree >= power
        expected = box if t >= power else []
        if direct.dim != len(expected):
            return False
        if direct.dim and set(direct.basis[j] for j in direct.pivots) != set(expected):
            return False
    return True


def compute_delta(f: Poly, e_max: int = 4, tau: Ideal | None = None) -> DeltaReport:
    """Normalized ``M_e`` sequence from ``e_0`` up to ``e_max`` and its verdict.

    Certified means the sequence reached the floor ``-n - ell_min``: it can
    never go below the floor (``m**ell`` inside ``tau``) and never increases,
    so it is constant from there on.
    """
    tau = _tau(f, tau)
    n = f.nvars - 1
    p = f.field.p
    verdict = isolated_non_f_pure_point(f, tau)
    if verdict.f_pure_at_m:
        return DeltaReport(None, DeltaStatus.INCONCLUSIVE, 0, verdict.ell_min, [],
                           note="F-pure at m: M_e is infinite and delta is undefined")
    start = e0(f, tau)
    if e_max < start:
        raise ValueError(f"e_max must be at least e_0 = {start}")
    floor = -n - verdict.ell_min if verdict.isolated else None
    sequence: list[tuple[int, int]] = []
    reports: list[MeReport] = []
    e_used = start
    for e in range(start, e_max + 1):
        try:
            rep = compute_me(f, e, tau)
        except ResourceLimitError as exc:
            return DeltaReport(None, DeltaStatus.INCONCLUSIVE, e_used, verdict.ell_min,
                               sequence, reports, note=f"resource guard at e={e}: {exc}")
        reports.append(rep)
        sequence.append((e, rep.normalized))
        e_used = e
        if (floor is not None and rep.normalized == floor and p**e > verdict.ell_min
                and colon_formula_matches(f.field, f.nvars, e, verdict.ell_min)):
            return DeltaReport(floor, DeltaStatus.CERTIFIED, e, verdict.ell_min,
                               sequence, reports)
    if not verdict.isolated:
        return DeltaReport(None, DeltaStatus.UNBOUNDED_DETECTED, e_used, verdict.ell_min,
                           sequence, reports,
                           note="non-F-pure locus is not isolated: sequence is unbounded below")
    if len(sequence) >= 2 and sequence[-1][1] == sequence[-2][1]:
        return DeltaReport(sequence[-1][1], DeltaStatus.PROBABLE_STABLE, e_used,
                           verdict.ell_min, sequence, reports)
    return DeltaReport(None, DeltaStatus.INCONCLUSIVE, e_used, verdict.ell_min,
                       sequence, reports, note="sequence not yet stable")


def injectivity_bound(f: Poly, e_max: int = 4, report: DeltaReport | None = None) -> int:
    """``delta(f) + d``: Frobenius is injective on every degree below it."""
    report = compute_delta(f, e_max) if report is None else report
    if report.status not in (DeltaStatus.CERTIFIED, DeltaStatus.PROBABLE_STABLE):
        raise DeltaUndeterminedError(report)
    return report.delta + f.degree()


def corollary_threshold(n: int, d: int) -> int:
    """Degree ``-n(d-1)`` at and below which injectivity characterizes isolation."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return -n * (d - 1)


def remark_bound_holds(report: MeReport, n: int, d: int, p: int) -> bool:
    """``M_e - (n+1)p**e + d <= 1 + (d - (n+1))/p`` as exact rationals."""
    if not report.finite:
        return True
    return report.normalized + d <= 1 + Fraction(d - (n + 1), p)


def ci_hilbert_series(degrees: list[int]) -> list[int]:
    """Coefficients of ``prod (1 - t**d_i) / (1 - t)``, i.e. of ``prod (1 + ... + t**(d_i-1))``."""
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    coeffs = [1]
    for d in degrees:
        out = [0] * (len(coeffs) + d - 1)
        for i, c in enumerate(coeffs):
            for j in range(d):
                out[i + j] += c
        coeffs = out
    return coeffs


def is_maximal_power(tau: Ideal, j: int) -> bool:
    """``tau == m**j`` by mutual membership."""
    return tau == Ideal.maximal_power(tau.field, tau.nvars, j)


def pure_power_ideal(field: PrimeField, degrees: list[int]) -> Ideal:
    nvars = len(degrees)
    gens = []
    for i, d in enumerate(degrees):
        m = [0] * nvars
        m[i] = d
        gens.append(tuple(m))
    return Ideal.from_monomials(field, gens)


__all__ = [
    "INFINITE", "MeReport", "DeltaReport", "DeltaStatus", "IsolatedVerdict",
    "DeltaUndeterminedError", "e0", "compute_me", "verify_me_witness", "ell_min",
    "isolated_non_f_pure_point", "compute_delta", "injectivity_bound",
    "corollary_threshold", "remark_bound_holds", "ci_hilbert_series",
    "bs_colon_formula", "colon_formula_matches", "is_maximal_power",
    "pure_power_ideal",
]
