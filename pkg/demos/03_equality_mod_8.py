# When is 12 s(a1, b) - 12 s(a2, b) divisible by 8?  The mod 8b criterion
# decides it from a1, a2, b alone; it is necessary for equality but not
# sufficient.
from collections import Counter

from dedsum import check_necCond_equivalence, classify_pair, cond_8Z, scan

pc = classify_pair(1, 15, 49)
print(f"s(1,49) = {pc.s1}, s(15,49) = {pc.s2}, 12*delta = {pc.delta12s}")
print("criterion holds:", cond_8Z(1, 15, 49), " sums equal:", pc.equal)

# The three equivalent forms: I mod 2b, 3s mod 2Z, and the congruence mod 8b
print(check_necCond_equivalence(1, 15, 49))

# How does 12*delta distribute over the ladder Z, 2Z, 4Z, 8Z for b <= 60?
ladder = Counter()
for b in range(2, 61):
    for pc in scan(b, b, "ladder=none"):
        ladder["none"] += 1
    for m in (1, 2, 4, 8):
        ladder[m] += sum(1 for _ in scan(b, b, f"ladder={m}"))
print("ladder counts, b <= 60:", dict(ladder))

# Pairs passing the criterion whose sums nonetheless differ
witnesses = list(scan(40, 50, "cond-c-not-equal"))
print(len(witnesses), "witnesses for 40 <= b <= 50, e.g.")
for pc in witnesses[:5]:
    print(f"  b={pc.b} a1={pc.a1} a2={pc.a2}  12*delta={pc.delta12s}")

equal = list(scan(2, 60, "equal"))
print(len(equal), "genuinely equal pairs for b <= 60, first few:",
      [(pc.a1, pc.a2, pc.b) for pc in equal[:6]])
