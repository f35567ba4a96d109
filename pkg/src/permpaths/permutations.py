"""Words, patterns, and pattern occurrences.

A permutation is a tuple of the letters 1..n in some order, e.g.
``(2, 1, 4, 7, 3, 5, 6)``.  More generally a *word* is any sequence of
distinct integers; ``reduce`` maps a word to the permutation with the
same relative order.  Positions in return values are 0-based; letters
are the values themselves (1-based by construction).

A *pattern* is a short permutation (length 1 to 4).  A word ``w``
contains the pattern ``t`` at positions ``i1 < i2 < ... < ik`` when
``reduce(w[i1], ..., w[ik]) == t``; such an index set is an
*occurrence*.  ``w`` *avoids* ``t`` when there is no occurrence.
"""

import itertools
from typing import NamedTuple, Sequence

from .errors import InvalidInputError

MAX_PATTERN_LENGTH = 4


class Occurrence(NamedTuple):
    positions: tuple[int, ...]  # strictly increasing, 0-based
    letters: tuple[int, ...]  # word values at those positions


def reduce(word: Sequence[int]) -> tuple[int, ...]:
    """The permutation order-isomorphic to ``word``.

    Each letter is replaced by its rank among the letters of the word,
    smallest letter becoming 1.

    >>> reduce((9, 8, 2, 4, 6))
    (5, 4, 1, 2, 3)
    >>> reduce(())
    ()
    """
    ranked = sorted(word)
    rank = {v: i + 1 for i, v in enumerate(ranked)}
    if len(rank) != len(word):
        raise InvalidInputError(f"letters are not distinct: {tuple(word)}")
    return tuple(rank[v] for v in word)


def is_permutation(word: Sequence[int]) -> bool:
    """True when ``word`` uses each letter 1..n exactly once."""
    return sorted(word) == list(range(1, len(word) + 1))


def check_permutation(word: Sequence[int]) -> tuple[int, ...]:
    p = tuple(word)
    if not is_permutation(p):
        raise InvalidInputError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def check_pattern(pattern: Sequence[int]) -> tuple[int, ...]:
    t = tuple(pattern)
    if not is_permutation(t) or not 1 <= len(t) <= MAX_PATTERN_LENGTH:
        raise InvalidInputError(
            f"pattern must be a permutation of 1..k with k <= {MAX_PATTERN_LENGTH}: {t}"
        )
    return t


def reverse(p: Sequence[int]) -> tuple[int, ...]:
    """Reverse the positions: (p1, ..., pn) -> (pn, ..., p1)."""
    return tuple(p[::-1])


def complement(p: Sequence[int]) -> tuple[int, ...]:
    """Complement the letters: each letter v becomes n+1-v.

    >>> complement((2, 1, 4, 3))
    (3, 4, 1, 2)
    """
    n = len(p)
    return tuple(n + 1 - v for v in p)


def _rank_chain(pattern: tuple[int, ...]) -> tuple[int, ...]:
    # Pattern slots ordered by letter value; an index set is an occurrence
    # iff the word values climb along this chain.
    return tuple(sorted(range(len(pattern)), key=lambda i: pattern[i]))


def occurrences(word: Sequence[int], pattern: Sequence[int]):
    """Yield every occurrence of ``pattern`` in ``word``.

    Occurrences come out in lexicographic order of their position tuples.
    Exhaustive over index subsets, so meant for small words.

    >>> [o.positions for o in occurrences((4, 3, 1, 2), (3, 2, 1))]
    [(0, 1, 2), (0, 1, 3)]
    """
    w = tuple(word)
    t = check_pattern(pattern)
    chain = _rank_chain(t)
    for combo in itertools.combinations(range(len(w)), len(t)):
        if all(w[combo[chain[i]]] < w[combo[chain[i + 1]]] for i in range(len(t) - 1)):
            yield Occurrence(combo, tuple(w[i] for i in combo))


def count_occurrences(word: Sequence[int], pattern: Sequence[int], cap: int | None = None) -> int:
    """Number of occurrences of ``pattern`` in ``word``.

    With ``cap`` given, counting stops as soon as the count exceeds it;
    a return value of ``cap + 1`` then means "more than cap".

    >>> count_occurrences((4, 3, 1, 2), (3, 2, 1))
    2
    >>> count_occurrences((1, 3, 2), (1, 3, 2))
    1
    """
    w = tuple(word)
    t = check_pattern(pattern)
    chain = _rank_chain(t)
    k = len(t)
    count = 0
    for combo in itertools.combinations(range(len(w)), k):
        if all(w[combo[chain[i]]] < w[combo[chain[i + 1]]] for i in range(k - 1)):
            count += 1
            if cap is not None and count > cap:
                return count
    return count


def avoids(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True when ``word`` has no occurrence of ``pattern``.

    >>> avoids((4, 3, 1, 2), (1, 3, 2))
    True
    """
    return count_occurrences(word, pattern, cap=0) == 0


def roles3(occ: Occurrence) -> dict[str, tuple[int, int]]:
    """Role labels for a 3-letter occurrence: a < b < c by letter value.

    Returns ``{"a": (position, letter), "b": ..., "c": ...}``.
    """
    assert len(occ.letters) == 3
    by_value = sorted(zip(occ.letters, occ.positions))
    return {
        "a": (by_value[0][1], by_value[0][0]),
        "b": (by_value[1][1], by_value[1][0]),
        "c": (by_value[2][1], by_value[2][0]),
    }


def record_highs(p: Sequence[int]) -> tuple[int, ...]:
    """Positions (0-based) of the record highs, i.e. letters exceeding
    everything before them.  The first letter is always a record high;
    for a 321-avoiding permutation the records end with the letter n.

    >>> record_highs((2, 1, 4, 7, 3, 5, 6))
    (0, 2, 3)
    """
    best = 0
    out = []
    for i, v in enumerate(p):
        if v > best:
            out.append(i)
            best = v
    return tuple(out)


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse ``"2 1 4 7 3 5 6"`` (spaces and/or commas) into a tuple."""
    parts = text.replace(",", " ").split()
    try:
        word = tuple(int(s) for s in parts)
    except ValueError:
        raise InvalidInputError(f"cannot parse permutation from {text!r}") from None
    return check_permutation(word)


def format_permutation(p: Sequence[int]) -> str:
    return " ".join(str(v) for v in p)
