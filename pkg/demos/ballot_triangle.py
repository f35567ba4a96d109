"""
The ballot triangle and its inverse
===================================

Ballot numbers refine the Catalan numbers by the length of the first
ascent. Arranged as a lower-triangular matrix they have an integer
inverse whose rows are exactly the coefficients of the Chebyshev-style
polynomials q_n, the same polynomials whose reciprocals generate
height-bounded Dyck path counts.
"""

from permpaths import (
    bounded_height_count,
    catalan,
    catalan_triangle,
    catalan_triangle_inverse,
    chebyshev_q,
)

NMAX = 6

tri = catalan_triangle(NMAX)
inv = catalan_triangle_inverse(NMAX)

print("triangle rows:")
for row in tri:
    print("  ", row)

print("inverse rows:")
for row in inv:
    print("  ", row)

# rows of the inverse, read right to left, are q_n coefficients
for n in range(NMAX + 1):
    q = chebyshev_q(n)
    assert all(inv[n][n - j] == q[j] for j in range(len(q)))
print("inverse rows match q_n coefficients up to n =", NMAX)

# bounded-height counts saturate at the Catalan numbers once the
# ceiling is out of reach
print()
print("n, height<=3, height<=6, catalan")
for n in range(8):
    print(f"{n}  {bounded_height_count(n, 3):6d} {bounded_height_count(n, 6):8d} {catalan(n):8d}")
