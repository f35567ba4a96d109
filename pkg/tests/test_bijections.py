"""Round-trip and domain tests for the bijections.

Exhaustive sweeps at the full published sizes live in the acceptance
suite; here the sizes stay small so the file runs in seconds, with
hypothesis picking random elements of the right classes.
"""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permpaths.bijections import (
    delete_returns,
    dyck_to_records,
    insert_returns,
    join_adjacent_132,
    join_boundary_132,
    join_one132,
    join_one321,
    join_two321_distinct,
    join_two321_shared,
    records_to_dyck,
    split_adjacent_132,
    split_boundary_132,
    split_one132,
    split_one321,
    split_two321_distinct,
    split_two321_shared,
    tail_rotate,
    tail_rotate_inverse,
    transfer_upsteps,
    transfer_upsteps_inverse,
)
from permpaths.errors import DomainError
from permpaths.oracle import enumerate_dyck, enumerate_paths
from permpaths.paths import path_stats
from permpaths.permutations import avoids, count_occurrences


def _class_members(n, pattern, k):
    return [
        p
        for p in itertools.permutations(range(1, n + 1))
        if count_occurrences(p, pattern, cap=k + 1) == k
    ]


avoiders_321 = st.integers(1, 7).flatmap(
    lambda n: st.sampled_from(_class_members(n, (3, 2, 1), 0))
)
one_132 = st.integers(3, 7).flatmap(
    lambda n: st.sampled_from(_class_members(n, (1, 3, 2), 1))
)
one_321 = st.integers(3, 7).flatmap(
    lambda n: st.sampled_from(_class_members(n, (3, 2, 1), 1))
)
two_321 = st.integers(4, 7).flatmap(
    lambda n: st.sampled_from(_class_members(n, (3, 2, 1), 2))
)
dyck_paths = st.integers(0, 7).flatmap(
    lambda n: st.sampled_from(list(enumerate_dyck(n)))
)


# -- records <-> Dyck ------------------------------------------------------


def test_records_example():
    assert records_to_dyck((2, 1, 4, 7, 3, 5, 6)) == "UUDDUUDUUUDDDD"
    assert dyck_to_records("UUDDUUDUUUDDDD") == (2, 1, 4, 7, 3, 5, 6)


def test_records_rejects_321():
    with pytest.raises(DomainError) as exc:
        records_to_dyck((3, 2, 1))
    assert exc.value.predicate == "avoids-321"


@given(p=avoiders_321)
def test_records_round_trip(p):
    d = records_to_dyck(p)
    assert dyck_to_records(d) == p
    assert path_stats(d).first_ascent == p[0]


@given(d=dyck_paths)
def test_records_round_trip_from_paths(d):
    if d:
        assert records_to_dyck(dyck_to_records(d)) == d


# -- return deletion / insertion -------------------------------------------


def test_returns_examples():
    assert delete_returns("UUDD") == "UD"
    assert delete_returns("UDUUDD") == "UUD"
    assert delete_returns("UD") == ""
    assert insert_returns("", 1) == "UD"
    assert insert_returns("UUD", 1) == "UDUUD"
    assert insert_returns("UUD", 2) == "UDUUDD"


def test_insert_returns_round_trips():
    assert insert_returns("UD", 1) == "UUDD"
    r = insert_returns("UUD", 2)
    assert delete_returns(r) == "UUD"
    assert path_stats(r).returns == 2


def test_returns_domain_errors():
    with pytest.raises(DomainError):
        delete_returns("")
    with pytest.raises(DomainError):
        delete_returns("DU")
    with pytest.raises(DomainError) as exc:
        insert_returns("UD", 5)
    assert exc.value.predicate == "insertable-returns"


def test_returns_exhaustive_small():
    for length in range(1, 9):
        for u in range(length // 2, length + 1):
            for r in enumerate_paths(u, length - u, lo=0):
                if not r.startswith("U"):
                    continue
                q = delete_returns(r)
                assert insert_returns(q, path_stats(r).returns) == r


# -- upstep transfer --------------------------------------------------------


def test_transfer_example():
    d = "UDUDUUDD"  # descents (1, 1, 2), two single nonfinal descents
    moved = transfer_upsteps(d, 2)
    assert moved == "UUUDDUDD"
    assert transfer_upsteps_inverse(moved, 2) == d
    assert path_stats(moved).first_ascent >= 3


def test_transfer_single_step():
    assert transfer_upsteps("UDUUDD", 1) == "UUDUDD"
    assert transfer_upsteps_inverse("UUDUDD", 1) == "UDUUDD"


def test_transfer_domain_errors():
    with pytest.raises(DomainError) as exc:
        transfer_upsteps("UUDD", 2)
    assert exc.value.predicate == "enough-nonfinal-descents"
    with pytest.raises(DomainError) as exc:
        transfer_upsteps_inverse("UDUD", 1)
    assert exc.value.predicate == "first-ascent-headroom"


@given(d=dyck_paths, i=st.integers(1, 3))
def test_transfer_round_trip_when_applicable(d, i):
    stats = path_stats(d)
    nonfinal = stats.descents[:-1]
    applicable = (
        len(nonfinal) >= i
        and all(v == 1 for v in nonfinal[:i])
        and not (len(stats.descents) == i + 1 and stats.ascents[-1] == 1)
    )
    if applicable:
        assert transfer_upsteps_inverse(transfer_upsteps(d, i), i) == d


# -- tail rotation ----------------------------------------------------------


def test_tail_rotate_examples():
    assert tail_rotate((2, 1, 3, 4, 5), 2) == (2, 1, 3, 5, 4)
    assert tail_rotate((2, 1, 3, 4), 3) == (2, 4, 1, 3)
    assert tail_rotate_inverse((2, 4, 1, 3), 3) == (2, 1, 3, 4)


def test_tail_rotate_identity_when_max_is_early():
    assert tail_rotate((3, 1, 2), 1) == (3, 1, 2)


def test_tail_rotate_domain():
    with pytest.raises(DomainError) as exc:
        tail_rotate((3, 2, 1), 1)
    assert exc.value.predicate == "avoids-321"
    with pytest.raises(DomainError) as exc:
        tail_rotate((1, 2, 3), 3)
    assert exc.value.predicate == "rotation-width-in-range"
    assert tail_rotate((2, 1, 3, 4), 2) == (2, 1, 4, 3)


# -- the 132 family ---------------------------------------------------------


def test_adjacent_132_examples():
    assert split_adjacent_132((1, 3, 2)) == ((1,), 1)
    assert split_adjacent_132((2, 4, 3, 1)) == ((2, 1), 1)
    assert join_adjacent_132((2, 1), 1) == (2, 4, 3, 1)


def test_boundary_132_round_trip_small():
    from permpaths.permutations import occurrences

    hits = 0
    for n in range(3, 8):
        for p in _class_members(n, (1, 3, 2), 1):
            occ = next(iter(occurrences(p, (1, 3, 2))))
            if occ.positions == (0, 1, n - 1) and occ.letters == (n - 2, n, n - 1):
                w2 = split_boundary_132(p)
                assert join_boundary_132(w2) == p
                hits += 1
    assert hits > 0


@given(p=one_132)
def test_one132_round_trip(p):
    rho, sigma = split_one132(p)
    assert join_one132(rho, sigma) == p
    assert count_occurrences(rho, (1, 3, 2)) == 1
    assert count_occurrences(sigma, (1, 3, 2)) == 1


# -- the 321 family ---------------------------------------------------------


def test_one321_example():
    assert split_one321((3, 2, 1)) == ((2, 1), (2, 1))
    assert join_one321((2, 1), (2, 1)) == (3, 2, 1)


@given(p=one_321)
def test_one321_round_trip(p):
    rho, sigma = split_one321(p)
    assert join_one321(rho, sigma) == p
    assert avoids(rho, (3, 2, 1)) and avoids(sigma, (3, 2, 1))


def test_two321_examples():
    assert split_two321_shared((3, 4, 2, 1, 5)) == ((2, 3, 1), (2, 3, 1, 4))
    assert split_two321_distinct((4, 2, 3, 1)) == ((3, 2, 1), (2, 1))
    assert join_two321_distinct((3, 2, 1), (2, 1)) == (4, 2, 3, 1)


def test_two321_shared_redirects_mirror_instances():
    """A pair sharing the top letter belongs to the mirrored class and
    the direct decomposition refuses it."""
    candidates = [
        p
        for p in _class_members(5, (3, 2, 1), 2)
        if _shares_top_not_bottom(p)
    ]
    assert candidates, "expected mirrored instances at n=5"
    for p in candidates:
        with pytest.raises(DomainError):
            split_two321_shared(p)


def _shares_top_not_bottom(p):
    from permpaths.permutations import occurrences

    occs = [o.letters for o in occurrences(p, (3, 2, 1))]
    (c1, b1, a1), (c2, b2, a2) = sorted(occs, key=lambda t: (t[1], t[0], t[2]))
    return b1 == b2 and a1 != a2


@given(p=two_321)
def test_two321_round_trip(p):
    from permpaths.permutations import occurrences

    occs = [o.letters for o in occurrences(p, (3, 2, 1))]
    (c1, b1, a1), (c2, b2, a2) = sorted(occs, key=lambda t: (t[1], t[0], t[2]))
    if b1 != b2:
        rho, sigma = split_two321_distinct(p)
        assert join_two321_distinct(rho, sigma) == p
    elif a1 == a2:
        rho, sigma = split_two321_shared(p)
        assert join_two321_shared(rho, sigma) == p
