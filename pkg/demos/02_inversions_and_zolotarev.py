# The permutation x -> a x mod b, its inversion count, and the parity
# statements of Zolotarev and Lerch.
import time

import numpy as np

from dedsum import inversions_fast, inversions_meyer, inversions_naive, jacobi, mu, perm_build

p = perm_build(3, 8)
print("pi_(3,8) =", p.image.tolist())
print("I(3, 8): naive", inversions_naive(3, 8), " fast", inversions_fast(3, 8),
      " from s(3,8)", inversions_meyer(3, 8))

# For odd b the sign of the permutation is the Jacobi symbol
b = 15
for a in [1, 2, 4, 7, 8, 11, 13, 14]:
    sign = (-1) ** inversions_fast(a, b)
    print(f"a={a:2d}  (-1)^I = {sign:+d}  (a/15) = {jacobi(a, b):+d}")

# For even b, Lerch's mu(a, b) = (a-1)(b+a-1)/4 still gives the parity
b = 12
table = np.array([[a, inversions_fast(a, b), mu(a, b)] for a in (1, 5, 7, 11)])
print("   a   I  mu")
print(table)
print("parities agree:", bool(np.all(table[:, 1] % 2 == table[:, 2] % 2)))

# Reciprocity between I(a, b) and I(b, a)
a, b = 17, 30
lhs = 4 * a * inversions_fast(a, b) + 4 * b * inversions_fast(b, a)
print("4aI(a,b) + 4bI(b,a) =", lhs, " (a-1)(b-1)(a+b-1) =", (a - 1) * (b - 1) * (a + b - 1))

# The merge counter scales to a million points
t0 = time.perf_counter()
count = inversions_fast(333_331, 10**6)
print(f"I(333331, 10^6) = {count}  ({time.perf_counter() - t0:.2f} s), Meyer gives {inversions_meyer(333_331, 10**6)}")
