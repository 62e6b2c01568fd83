"""Squares in the full matrix ring M2(q), q = 2^r.

Counting the Jordan classes [[l, 1], [0, l]] over every l in F_q (l = 0
included) gives 1 - (q^2 - 1)/q^3.  The simpler value 1 - 1/q does not
match the brute-force count.
"""

from imago import Mat2Ring, NCPoly, ZmodN, gl2ring_square_closed_forms, poly_image_ratio, ring_product

sq = NCPoly.power(2)
for n in (1, 2, 3):
    print(f"x^2 on Z4^{n}: {poly_image_ratio(sq, ring_product(*[ZmodN(4)] * n)).ratio}")

for r in (1, 2):
    simple, counted = gl2ring_square_closed_forms(r)
    rep = poly_image_ratio(sq, Mat2Ring(2, r))
    print(f"x^2 on M2({2**r}): brute force {rep.ratio} ({rep.image_size} of {rep.order}), "
          f"class count {counted}, 1 - 1/q = {simple}")
