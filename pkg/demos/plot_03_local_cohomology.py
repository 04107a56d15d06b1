"""
Frobenius on graded local cohomology
====================================

H^n_m(R/fR) is the kernel of multiplication by f on H^(n+1)_m(R), whose
pieces have a basis of inverse monomials.  Its Frobenius is
alpha -> f^(p-1) F(alpha); we measure the kernel two independent ways.
"""

from fsing import parse_poly
from fsing.localcoh import (LocalCohElement, frobenius, frobenius_kernel_dim_colon,
                            frobenius_kernel_dim_direct, h_top_basis, hn_piece_dim,
                            multiply_by_poly)

f = parse_poly("x0^2*x1^2 + x1^2*x2^2 + x2^2*x0^2", 2, 3)
d = f.degree()

# H^3_m(R) in degree -5 is spanned by the inverse monomials of total degree -5
print(h_top_basis(2, -5))

# products with exponents >= 0 vanish
alpha = LocalCohElement.from_terms(f.field, 3, {(-2, -1, -1): 1})
print(multiply_by_poly(alpha, parse_poly("x0", 2, 3)))
print(frobenius(alpha))

# dimensions of H^2_m(R/fR) near the top
print([(t, hn_piece_dim(f, t)) for t in range(-3, d + 1)])

# direct matrix versus the colon description; they always agree
for t in range(-4, 3):
    print(t, frobenius_kernel_dim_direct(f, t), frobenius_kernel_dim_colon(f, t))
