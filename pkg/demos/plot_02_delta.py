"""
The M_e sequence and delta(f)
=============================

Walk the normalized values M_e - (n+1)p^e for a sextic in six variables
over F_2 and watch them settle at -n - l_min.
"""

from fsing import parse_poly
from fsing.fpurity import (compute_delta, compute_me, injectivity_bound,
                           isolated_non_f_pure_point, verify_me_witness)
from fsing.frobenius import test_ideal

f = parse_poly("x0^2*x1*x2*x3*x4 + x0*x1^2*x2*x3*x4 + x0*x1*x2^2*x3*x4"
               " + x0*x1*x2*x3^2*x4 + x0*x1*x2*x3*x4^2 + x5^6", 5, 2)
tau = test_ideal(f)
print("tau =", tau)

# m^3 sits inside tau, so the origin is an isolated non-F-pure point
print(isolated_non_f_pure_point(f, tau))

# M_e comes with a minimal degree witness r: r*tau in m^[e], r not in m^[e]
for e in (1, 2):
    rep = compute_me(f, e, tau)
    print(f"e={e}: M_e={rep.me} normalized={rep.normalized} witness={rep.witness}")
    assert verify_me_witness(f, rep, tau)

# once p^e exceeds l_min the value hits the floor and is certified
rep = compute_delta(f, e_max=3, tau=tau)
print(rep.delta, rep.status.value, rep.sequence)

# Frobenius on H^5_m(R/fR) is injective in every degree below delta + d
print("injective below degree", injectivity_bound(f, report=rep))

# without isolation the sequence keeps falling
g = parse_poly("x0^2*x1", 1, 2)
print(compute_delta(g, e_max=3).sequence)
