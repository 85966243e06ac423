# T(a, b) mod 8 in closed form, and the mod 4 cases for even a and a*.
from collections import Counter

from dedsum import alt_sum, check_altsum_mod8, check_girstmair, mod_inverse, mu

a, b = 2, 15
star = mod_inverse(a, b)
print(f"b*T = {b * alt_sum(a, b) % 8} mod 8,  -4mu + b^2 + 2 - a - a* = {(-4 * mu(a, b) + b * b + 2 - a - star) % 8} mod 8")

tally = Counter()
for b in range(3, 400):
    for a in range(1, b):
        try:
            g = check_girstmair(a, b)
        except ValueError:
            continue
        assert check_altsum_mod8(a, b)
        tally[g.case_tag.value, g.holds] += 1
for (tag, holds), n in sorted(tally.items()):
    print(f"{tag:14s} holds={holds}: {n}")

for a, b in [(2, 15), (4, 15), (3, 7)]:
    print(check_girstmair(a, b))
