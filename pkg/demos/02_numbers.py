"""
q-Bernoulli and q-tangent numbers
=================================

The numbers are read off quotients of q-hyperbolic series, then tied
together by a convolution identity that holds for every base.
"""

from fractions import Fraction

from qlidstone.families import classical_bernoulli, q_number_table, verify_im_identity
from qlidstone.qcore import QContext

for q in (Fraction(1, 2), Fraction(2, 5), Fraction(1)):
    ctx = QContext(q)
    beta = q_number_table(ctx, "q_bernoulli", 4)
    tan = q_number_table(ctx, "q_tangent", 4)
    print(f"q = {q}")
    print("  beta_{2n}:", [str(v) for v in beta.values])
    print("  T_{2n+1}: ", [str(v) for v in tan.values])
    print("  ", verify_im_identity(ctx, 6).summary())

# at q = 1 the Bernoulli numbers are the classical ones
print("classical B_{2n}:", [str(b) for b in classical_bernoulli(8)[::2]])
