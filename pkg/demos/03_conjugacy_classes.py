"""Class representatives of GL2(q) by family, checked against exhaustive conjugation."""

from collections import Counter

from imago import GL2, conjugacy_classes_bruteforce, gl2_class_reps

for q in (2, 3, 4, 5):
    reps = gl2_class_reps(q)
    fams = Counter(c.family for c in reps)
    brute = conjugacy_classes_bruteforce(GL2.of(q))
    same = sorted(c.size for c in reps) == sorted(c.size for c in brute)
    print(f"GL2({q}): {len(reps)} classes {dict(fams)}, brute force {len(brute)}, sizes agree: {same}")

print("\nGL2(3) representatives:")
for c in gl2_class_reps(3):
    print(f"  {c.family:<11} size {c.size:>2}  {c.rep.rows()}")
