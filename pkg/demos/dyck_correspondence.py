"""
From 321-avoiders to Dyck paths and back
========================================

The record-based correspondence sends a 321-avoiding permutation to a
Dyck path. Two statistics ride along for free: the first letter of the
permutation becomes the length of the first ascent, and the distance of
the maximum from the right end becomes the last descent.
"""

from permpaths import dyck_to_records, path_stats, records_to_dyck

p = (2, 1, 4, 7, 3, 5, 6)
d = records_to_dyck(p)
stats = path_stats(d)

print("permutation:", p)
print("Dyck path:  ", d)
print("ascents:    ", stats.ascents)
print("descents:   ", stats.descents)

# first letter <-> first ascent
print(p[0], "==", stats.first_ascent)

# position of the maximum from the right <-> last descent
print(len(p) - p.index(len(p)), "==", stats.last_descent)

# and the inverse recovers the permutation exactly
assert dyck_to_records(d) == p
print("round trip ok")
