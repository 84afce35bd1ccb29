# Coefficients per digit-length block
#
# Inside the block of l-digit terms the right concatenation of 1, 2, 3, ...
# is (A + M*k + T*10**(l*k)) / D with k the offset into the block.  The
# first two blocks reproduce the series coefficients
#     100*10**n/81 - n/9 - 19/81
#     120999998998000*100**n/9801 - n/99 - 1090/9801

from fractions import Fraction

from apconcat import NATURALS, Kind, coefficients_for_length, smarandache_coefficients

for l in (1, 2, 3):
    cs = coefficients_for_length(Kind.RIGHT, NATURALS, l)
    alpha, mu, theta = (Fraction(v, cs.D) for v in (cs.A, cs.M, cs.T))
    print(f"l={l} block starts at n={cs.start}")
    print(f"   alpha = {alpha}, mu = {mu}, theta = {theta}")
    # the direct formulas for 1, 2, 3, ... give the same set
    assert smarandache_coefficients(l) == cs

# Left and palindromic blocks have their own layouts.
for kind in (Kind.LEFT, Kind.PALINDROMIC):
    cs = coefficients_for_length(kind, NATURALS, 1)
    print(kind.value, "l=1:", dict(A=cs.A, M=cs.M, T=cs.T, D=cs.D, p=cs.p))
