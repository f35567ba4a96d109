"""
Splitting permutations with few forbidden patterns
==================================================

A permutation containing exactly one or two occurrences of 321 falls
apart into a pair of smaller, more constrained pieces, and the pair
determines the original. The splits below power the closed-form counts
for these classes.
"""

from permpaths import (
    join_one321,
    join_two321_distinct,
    join_two321_shared,
    split_one321,
    split_two321_distinct,
    split_two321_shared,
)

# exactly one 321: overlap the two halves on one letter
p = (3, 2, 1)
rho, sigma = split_one321(p)
print(p, "->", rho, "+", sigma)
assert join_one321(rho, sigma) == p

# two occurrences sharing their bottom letter
p = (3, 4, 2, 1, 5)
rho, sigma = split_two321_shared(p)
print(p, "->", rho, "+", sigma)
assert join_two321_shared(rho, sigma) == p

# two occurrences with all six roles distinct
p = (4, 2, 3, 1)
rho, sigma = split_two321_distinct(p)
print(p, "->", rho, "+", sigma)
assert join_two321_distinct(rho, sigma) == p

print("all three pairs rebuilt their permutation")
