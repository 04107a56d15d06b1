"""
Witnesses of non-injectivity
============================

Each finite M_e produces an explicit class alpha in H^n_m(R/fR) killed by
Frobenius.  Comparing its degree with -n(d-1) separates isolated from
non-isolated non-F-pure points.
"""

from fsing import parse_poly
from fsing.fpurity import corollary_threshold, isolated_non_f_pure_point
from fsing.localcoh import witness_non_injectivity

cases = {
    "cusp-like cubic": parse_poly("x0^2*x1 + x0*x1^2", 1, 2),
    "double line": parse_poly("x0^2*x1", 1, 2),
}

for name, f in cases.items():
    n, d = f.nvars - 1, f.degree()
    thr = corollary_threshold(n, d)
    print(name, isolated_non_f_pure_point(f))
    for e in (1, 2, 3):
        alpha, t = witness_non_injectivity(f, e)
        # witnesses for the isolated point never drop to the threshold
        print(f"  e={e}: alpha={alpha} in degree {t} (threshold {thr})")
