"""Build a finite group on which x^2 has a prescribed image ratio, approximately.

Z/2 contributes 1/2 and GL2(2^s) contributes 1 - 2^-s; a greedy search picks
the factors.  Small realized groups are then checked by brute force.
"""

from fractions import Fraction

from imago import approximate, format_group_spec, group_order, power_word, ratio, realize

for target, eps in [(Fraction(3, 8), Fraction(1, 10**6)), (Fraction(3, 10), Fraction(1, 1000)),
                    (Fraction(2, 3), Fraction(1, 10**5)), (Fraction(1, 64), Fraction(1, 10))]:
    plan = approximate(target, eps)
    spec = realize(plan, 2)
    order = group_order(spec)
    line = (f"target {target} (eps {eps}): m={plan.m} sizes={list(plan.field_sizes)} "
            f"achieved {float(plan.achieved):.7f} exact={plan.exact}\n    group {format_group_spec(spec)}, order {order}")
    if order <= 10**5:
        line += f", brute force {ratio(power_word(2), spec).ratio}"
    print(line)
