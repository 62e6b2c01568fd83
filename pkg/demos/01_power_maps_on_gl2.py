"""Squaring and cubing in GL2(q) by brute force, next to the closed form.

When p divides M and gcd(q^2 - 1, M) = 1, x -> x^M on GL2(q) hits every
class except the q - 1 Jordan classes, so the image ratio is 1 - 1/q.
Outside those hypotheses the formula is refused.
"""

from imago import GL2, PreconditionError, gl2_power_ratio, power_word, ratio

for q, M in [(2, 2), (4, 2), (3, 3), (8, 2), (2, 20)]:
    rep = ratio(power_word(M), GL2.of(q))
    print(f"x^{M:<2} on GL2({q}):  brute force {str(rep.ratio):>5}  "
          f"(|image| {rep.image_size} of {rep.order})  closed form {gl2_power_ratio(q, M)}")

# p = 3 does not divide M = 2, so no closed form; the oracle still answers
rep = ratio(power_word(2), GL2.of(3))
print(f"\nx^2  on GL2(3):  brute force {rep.ratio}")
try:
    gl2_power_ratio(3, 2)
except PreconditionError as exc:
    print(f"closed form refused: {exc}")
