"""
Test ideals and Fedder's criterion
==================================

Compute tau(f^(1-1/p^e)) from the p^e-th root decomposition of f^(p^e-1),
and compare with the F-purity verdict at the origin.
"""

from fsing import parse_poly
from fsing.frobenius import (fedder_not_f_pure_at_m, non_f_pure_ideal_estimate,
                             peth_root_decompose, test_ideal)

# three coordinate conics over F_3
f = parse_poly("x0^2*x1^2 + x1^2*x2^2 + x2^2*x0^2", 2, 3)

# f^(p-1) split by residues of its exponents mod p
dec = peth_root_decompose(f ** 2, 1)
for res in dec.residues():
    print(res, "->", dec.roots[res])
assert dec.reassemble() == f ** 2

# the roots generate the test ideal; here it is the maximal ideal
tau = test_ideal(f)
print("tau =", tau)

# tau is proper exactly when f^(p-1) lies in (x0^p, x1^p, x2^p)
print("not F-pure at m:", fedder_not_f_pure_at_m(f))

# a normal crossing is F-pure, so its test ideal is the unit ideal
g = parse_poly("x0*x1", 1, 3)
print(test_ideal(g), fedder_not_f_pure_at_m(g))

# raising the level approximates the non-F-pure ideal
est = non_f_pure_ideal_estimate(parse_poly("x0^2*x1", 1, 2), e_max=4)
print(est.status.value, [str(level) for level in est.levels])
