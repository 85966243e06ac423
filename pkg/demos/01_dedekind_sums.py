# Dedekind sums two ways: straight from the sawtooth definition, and from
# the continued fraction of a/b.
from fractions import Fraction

from dedsum import cf_expand, dedekind_sum_bhk, dedekind_sum_def, mod_inverse, sawtooth

# The sawtooth ((x)) vanishes on the integers and is x - floor(x) - 1/2 elsewhere
for x in [Fraction(1, 3), Fraction(-1, 4), Fraction(2)]:
    print(f"(({x})) = {sawtooth(x)}")

# s(a, b) = sum_k ((ak/b))((k/b)) costs O(b) ...
print("s(1, 49)  =", dedekind_sum_def(1, 49).value)
print("s(15, 49) =", dedekind_sum_def(15, 49).value)

# ... while 12 s(a, b) = T(a, b) + (a + a*)/b - 3 only needs the Euclidean
# algorithm.  T is the alternating digit sum of the odd-length expansion.
cf = cf_expand(15, 49)
print(f"15/49 = [0; {', '.join(map(str, cf.digits))}]  T = {cf.alt_sum}  D = {cf.digit_sum}")
print("15* mod 49 =", mod_inverse(15, 49))
print("s(15, 49) via T =", dedekind_sum_bhk(15, 49).value)

# The fast route handles moduli far beyond what the defining sum can reach
b = 10**40 + 1
print("s(12345, 10^40+1) =", dedekind_sum_bhk(12345, b).value)

# 6b s(a, b) is always an integer
for a in [1, 2, 4, 7, 8]:
    s = dedekind_sum_bhk(a, 15).value
    print(f"s({a}, 15) = {s!s:>8}   6*15*s = {6 * 15 * s}")
