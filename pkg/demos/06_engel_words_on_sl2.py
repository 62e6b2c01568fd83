"""Engel words on small SL2(q), set beside their large-q value.

For q beyond some threshold the image of e_i is expected to be everything
but the identity.  The threshold is not known, so nothing is asserted.
"""

from imago import SL2, engel, engel_sl2_conjectural_ratio, ratio

for q in (2, 3, 4, 5, 7):
    obs = ratio(engel(1), SL2.of(q)).ratio
    conj = engel_sl2_conjectural_ratio(1, q)
    print(f"e1 on SL2({q}): observed {str(obs):>7}   large-q value {conj.value}")
