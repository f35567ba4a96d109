"""
Closed forms against brute force
================================

Every counting family in the package has two independent routes: a
closed form in ballot numbers or binomials, and an exhaustive scan of
the symmetric group. This script tabulates both side by side for a
couple of families so you can watch them agree.
"""

from permpaths import count, oracle_count

# how many permutations of n letters contain the pattern 321 exactly twice?
print("n   formula   search")
for n in range(4, 9):
    formula = count("p321-2", n)
    search = oracle_count("p321-2", n)
    print(f"{n}  {formula:8d} {search:8d}")

print()

# the same drill for single-132 permutations, whose count is one
# binomial coefficient; the search route knows nothing about that
print("n   formula   search")
for n in range(3, 9):
    formula = count("p132-1", n)
    search = oracle_count("p132-1", n)
    print(f"{n}  {formula:8d} {search:8d}")
