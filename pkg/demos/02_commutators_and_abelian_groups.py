"""Commutator words vanish on abelian groups; other words see only their exponent sums."""

from fractions import Fraction

from imago import Cyclic, abelian_power_ratio, engel, parse_word, product, ratio

e1, e2 = engel(1), engel(2)
print(f"e1 = {e1}")
print(f"e2 = {e2}\n")

for n in range(2, 9):
    print(f"Z/{n}:  e1 -> {ratio(e1, Cyclic(n)).ratio},  e2 -> {ratio(e2, Cyclic(n)).ratio}")

# 2x + 2y on Z/4 only reaches {0, 2}
w = parse_word("x^2 y^2")
for k, t in [(4, 1), (4, 2), (6, 1), (5, 2)]:
    brute = ratio(w, product(*[Cyclic(k)] * t)).ratio
    print(f"\n{w} on (Z/{k})^{t}: brute force {brute}, gcd formula {abelian_power_ratio((2, 2), k, t)}, "
          f"1/k^t would say {Fraction(1, k**t)}", end="")
print()
