"""
Building an odd q-Lidstone family and checking it
==================================================

Everything is exact: seeds, q and every coefficient are Fractions.
Run with ``python3 demos/01_build_and_verify.py``.
"""

from fractions import Fraction

from qlidstone import lidstone as L
from qlidstone.qcore import QContext
from qlidstone.qpoly import render

# pick a base and a seed; the first seed value must be nonzero
ctx = QContext(Fraction(1, 2))
seed = [Fraction(1), Fraction(1, 3), Fraction(-2), Fraction(5, 7), Fraction(1, 2), Fraction(0), Fraction(3)]
N = 4

# the series formula gives p_0 .. p_N
polys = L.build_from_seed(ctx, L.ODD_I, seed, N)
for n, p in enumerate(polys):
    print(f"p_{n}(z) = {render(p)}")

# D_q^2 p_n is a fixed multiple of p_{n-1}; the seed fixes each slope D_q p_n(0)
report = L.verify_defining_system(ctx, L.ODD_I, polys, seed)
print(report.summary())

# three more constructions land on the same polynomials
for build in (L.build_by_recurrence1, L.build_by_determinant, L.build_by_production):
    print(build.__name__, build(ctx, L.ODD_I, seed, N) == polys)

# the conjugate seed inverts the Lidstone matrix
beta = L.conjugate_seed(ctx, L.ODD_I, seed, N)
print("conjugate seed:", [str(b) for b in beta.values])
A = L.lidstone_matrix(ctx, L.ODD_I, seed, N)
B = L.lidstone_matrix(ctx, L.ODD_I, beta, N)
print("A times conjugate matrix is I:", (A @ B).is_identity())

# the production matrix is lower Hessenberg and multiplies the family by z^2
Pi = L.production_matrix(ctx, L.ODD_I, seed, N)
print(Pi)
print("eigen rows vanish:", not any(L.production_eigen_residuals(ctx, L.ODD_I, seed, N)))

# generating functions, checked coefficientwise through t^(2N+2)
print(L.gf_check(ctx, L.ODD_I, seed, N).summary())
