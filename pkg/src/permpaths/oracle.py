"""Brute-force enumeration oracle.

Everything here counts by exhaustive enumeration, independently of the
closed forms elsewhere in the package, so the two routes can be checked
against each other.  Permutations stream in lexicographic order and
paths in lexicographic order of their step strings (``D`` < ``U``);
the order is deterministic and does not depend on the worker count.

Counting sweeps over S_n are vectorized with numpy in chunks (and can
be partitioned by first letter across worker processes; partial counts
are summed in first-letter order, so results are identical for any
worker count).  The streaming generators and the per-word ``holds``
predicates are the plain-Python reference; tests cross-check the two.

Sizes are capped because the state spaces explode; pass
``allow_large=True`` to override a cap deliberately.
"""

import dataclasses
import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import paths as pathmod
from .errors import InvalidInputError, ResourceLimitError
from .permutations import check_pattern, count_occurrences

MAX_PERM_N = 11
MAX_DYCK_SEMILENGTH = 14
MAX_MARKED_SIZE = 12  # cap on n + k for marked-path histograms

WORKERS_ENV_VAR = "PERMPATHS_WORKERS"

_CHUNK_ROWS = 131072
_PARALLEL_MIN_N = 9


# ---------------------------------------------------------------------------
# permutation conditions (conjunctions of these form a filter)


@dataclasses.dataclass(frozen=True)
class PatternCount:
    """Exactly ``count`` occurrences of ``pattern``."""

    pattern: tuple[int, ...]
    count: int

    def __post_init__(self):
        check_pattern(self.pattern)
        if self.count < 0:
            raise InvalidInputError("occurrence count must be >= 0")

    def holds(self, word: Sequence[int]) -> bool:
        return count_occurrences(word, self.pattern, cap=self.count) == self.count

    def mask(self, arr: np.ndarray) -> np.ndarray:
        n = arr.shape[1]
        k = len(self.pattern)
        counts = np.zeros(arr.shape[0], dtype=np.int16)
        if n >= k:
            less = {}
            for i, j in itertools.combinations(range(n), 2):
                less[i, j] = arr[:, i] < arr[:, j]

            def is_less(i, j):
                return less[i, j] if i < j else ~less[j, i]

            chain = sorted(range(k), key=lambda i: self.pattern[i])
            for combo in itertools.combinations(range(n), k):
                m = is_less(combo[chain[0]], combo[chain[1]])
                for t in range(1, k - 1):
                    m = m & is_less(combo[chain[t]], combo[chain[t + 1]])
                counts += m
        return counts == self.count


@dataclasses.dataclass(frozen=True)
class FirstEq:
    value: int

    def holds(self, word: Sequence[int]) -> bool:
        return len(word) > 0 and word[0] == self.value

    def mask(self, arr: np.ndarray) -> np.ndarray:
        if arr.shape[1] == 0:
            return np.zeros(arr.shape[0], dtype=bool)
        return arr[:, 0] == self.value


@dataclasses.dataclass(frozen=True)
class FirstGe:
    value: int

    def holds(self, word: Sequence[int]) -> bool:
        return len(word) > 0 and word[0] >= self.value

    def mask(self, arr: np.ndarray) -> np.ndarray:
        if arr.shape[1] == 0:
            return np.zeros(arr.shape[0], dtype=bool)
        return arr[:, 0] >= self.value


@dataclasses.dataclass(frozen=True)
class LastLe:
    value: int

    def holds(self, word: Sequence[int]) -> bool:
        return len(word) > 0 and word[-1] <= self.value

    def mask(self, arr: np.ndarray) -> np.ndarray:
        if arr.shape[1] == 0:
            return np.zeros(arr.shape[0], dtype=bool)
        return arr[:, -1] <= self.value


@dataclasses.dataclass(frozen=True)
class LastRunIncreasing:
    """The final ``length`` letters are increasing (false when the word is
    shorter than ``length``)."""

    length: int

    def holds(self, word: Sequence[int]) -> bool:
        i = self.length
        if len(word) < i:
            return False
        tail = word[len(word) - i :]
        return all(tail[t] < tail[t + 1] for t in range(i - 1))

    def mask(self, arr: np.ndarray) -> np.ndarray:
        n = arr.shape[1]
        if n < self.length:
            return np.zeros(arr.shape[0], dtype=bool)
        m = np.ones(arr.shape[0], dtype=bool)
        for t in range(n - self.length, n - 1):
            m &= arr[:, t] < arr[:, t + 1]
        return m


@dataclasses.dataclass(frozen=True)
class LastRunDecreasing:
    length: int

    def holds(self, word: Sequence[int]) -> bool:
        i = self.length
        if len(word) < i:
            return False
        tail = word[len(word) - i :]
        return all(tail[t] > tail[t + 1] for t in range(i - 1))

    def mask(self, arr: np.ndarray) -> np.ndarray:
        n = arr.shape[1]
        if n < self.length:
            return np.zeros(arr.shape[0], dtype=bool)
        m = np.ones(arr.shape[0], dtype=bool)
        for t in range(n - self.length, n - 1):
            m &= arr[:, t] > arr[:, t + 1]
        return m


@dataclasses.dataclass(frozen=True)
class OnePosGe:
    """The letter 1 sits at 1-based position >= ``position``."""

    position: int

    def holds(self, word: Sequence[int]) -> bool:
        return len(word) > 0 and word.index(1) + 1 >= self.position

    def mask(self, arr: np.ndarray) -> np.ndarray:
        if arr.shape[1] == 0:
            return np.zeros(arr.shape[0], dtype=bool)
        return np.argmin(arr, axis=1) + 1 >= self.position


@dataclasses.dataclass(frozen=True)
class MaxPosLe:
    """The letter n sits at 1-based position <= ``position``."""

    position: int

    def holds(self, word: Sequence[int]) -> bool:
        return len(word) > 0 and word.index(len(word)) + 1 <= self.position

    def mask(self, arr: np.ndarray) -> np.ndarray:
        if arr.shape[1] == 0:
            return np.zeros(arr.shape[0], dtype=bool)
        return np.argmax(arr, axis=1) + 1 <= self.position


PermCondition = (
    PatternCount | FirstEq | FirstGe | LastLe | LastRunIncreasing | LastRunDecreasing
    | OnePosGe | MaxPosLe
)

PermFilter = tuple[PermCondition, ...]


def matches(word: Sequence[int], conditions: Iterable[PermCondition]) -> bool:
    return all(c.holds(word) for c in conditions)


# ---------------------------------------------------------------------------
# permutation enumeration and counting


def _check_perm_size(n: int, allow_large: bool) -> None:
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    if n > MAX_PERM_N and not allow_large:
        raise ResourceLimitError(
            f"refusing to enumerate S_{n} (cap {MAX_PERM_N}); pass allow_large to force"
        )


def enumerate_perms(
    n: int, conditions: Iterable[PermCondition] = (), allow_large: bool = False
) -> Iterator[tuple[int, ...]]:
    """All permutations of 1..n satisfying every condition, in
    lexicographic order."""
    _check_perm_size(n, allow_large)
    conditions = tuple(conditions)
    for p in itertools.permutations(range(1, n + 1)):
        if matches(p, conditions):
            yield p


def _first_letter_blocks(n: int, first: int | None) -> Iterator[tuple[int, ...]]:
    if first is None:
        yield from itertools.permutations(range(1, n + 1))
    else:
        rest = [v for v in range(1, n + 1) if v != first]
        for t in itertools.permutations(rest):
            yield (first,) + t


def _count_block(n: int, first: int | None, conditions: PermFilter) -> int:
    # Cheap positional masks first, pattern counting on the survivors.
    cheap = tuple(c for c in conditions if not isinstance(c, PatternCount))
    patterns = tuple(c for c in conditions if isinstance(c, PatternCount))
    total = 0
    source = _first_letter_blocks(n, first)
    while True:
        block = list(itertools.islice(source, _CHUNK_ROWS))
        if not block:
            return total
        arr = np.array(block, dtype=np.int8)
        if arr.ndim == 1:  # n == 0: single empty row
            arr = arr.reshape(len(block), 0)
        alive = np.ones(len(block), dtype=bool)
        for c in cheap:
            alive &= c.mask(arr)
        sub = arr[alive]
        keep = np.ones(sub.shape[0], dtype=bool)
        for c in patterns:
            keep &= c.mask(sub)
        total += int(keep.sum())


def _allowed_firsts(n: int, conditions: PermFilter) -> list[int] | None:
    """First letters compatible with the first-letter conditions, or
    ``None`` when no condition constrains the first letter."""
    ok: set[int] | None = None
    for c in conditions:
        if isinstance(c, FirstEq):
            this = {c.value} if 1 <= c.value <= n else set()
        elif isinstance(c, FirstGe):
            this = set(range(max(1, c.value), n + 1))
        else:
            continue
        ok = this if ok is None else ok & this
    return None if ok is None else sorted(ok)


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV_VAR)
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise InvalidInputError(f"{WORKERS_ENV_VAR} must be an integer: {env!r}")
    return os.cpu_count() or 1


def count_perms(
    n: int,
    conditions: Iterable[PermCondition] = (),
    workers: int | None = None,
    allow_large: bool = False,
) -> int:
    """Number of permutations of 1..n satisfying every condition.

    The answer is independent of ``workers``; parallelism only splits
    the scan by first letter.
    """
    _check_perm_size(n, allow_large)
    conditions = tuple(conditions)
    if workers is None:
        workers = _default_workers() if n >= _PARALLEL_MIN_N else 1
    firsts = _allowed_firsts(n, conditions) if n >= 2 else None
    if firsts is None:
        firsts = list(range(1, n + 1))
    if workers <= 1 or n < 2 or len(firsts) <= 1:
        if n >= 2 and len(firsts) < n:
            return sum(_count_block(n, f, conditions) for f in firsts)
        return _count_block(n, None, conditions)
    k = len(firsts)
    try:
        with ProcessPoolExecutor(max_workers=min(workers, k)) as pool:
            parts = list(pool.map(_count_block, [n] * k, firsts, [conditions] * k))
    except OSError:
        return sum(_count_block(n, f, conditions) for f in firsts)
    return sum(parts)


# ---------------------------------------------------------------------------
# path enumeration


def enumerate_paths(
    ups: int,
    downs: int,
    lo: int | None = 0,
    hi: int | None = None,
    allow_large: bool = False,
) -> Iterator[str]:
    """All paths with the given step counts whose running height stays in
    [lo, hi], in lexicographic order of the step string ('D' < 'U').
    ``lo=None`` or ``hi=None`` leaves that side unbounded.
    """
    if ups < 0 or downs < 0:
        raise InvalidInputError("step counts must be >= 0")
    if (ups + downs) // 2 > MAX_DYCK_SEMILENGTH and not allow_large:
        raise ResourceLimitError(
            f"path length {ups + downs} over cap; pass allow_large to force"
        )

    def walk(prefix: list[str], u: int, d: int, h: int) -> Iterator[str]:
        if u == 0 and d == 0:
            yield "".join(prefix)
            return
        if d > 0 and (lo is None or h - 1 >= lo):
            prefix.append("D")
            yield from walk(prefix, u, d - 1, h - 1)
            prefix.pop()
        if u > 0 and (hi is None or h + 1 <= hi):
            prefix.append("U")
            yield from walk(prefix, u - 1, d, h + 1)
            prefix.pop()

    return walk([], ups, downs, 0)


def enumerate_dyck(n: int, allow_large: bool = False) -> Iterator[str]:
    """All Dyck n-paths in lexicographic order.

    >>> list(enumerate_dyck(2))
    ['UDUD', 'UUDD']
    """
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    return enumerate_paths(n, n, lo=0, allow_large=allow_large)


def count_dyck_class_oracle(
    n: int, constraint: pathmod.DyckClassConstraint, allow_large: bool = False
) -> int:
    """Count a constrained Dyck class by filtering the full enumeration."""
    pred = dyck_class_predicate(constraint)
    return sum(1 for p in enumerate_dyck(n, allow_large=allow_large) if pred(p))


def dyck_class_predicate(constraint: pathmod.DyckClassConstraint):
    """The membership test a Dyck path must pass for ``constraint``.

    This is the definitional counterpart of ``paths.count_dyck_class``;
    the two are checked against each other in the verification suite.
    """

    def pred(path: str) -> bool:
        st = pathmod.path_stats(path)
        match constraint:
            case pathmod.FirstAscentEq(k=k):
                return st.first_ascent == k
            case pathmod.FirstAscentGe(k=k):
                return st.first_ascent >= k
            case pathmod.FirstAscentLastDescent(r=r, s=s, require_interior_return=req):
                return (
                    st.first_ascent >= r
                    and st.last_descent >= s
                    and (st.interior_returns >= 1 or not req)
                )
            case pathmod.FirstAscentNonfinalDescentsOne(r=r, s=s):
                nonfinal = st.descents[:-1]
                return (
                    st.first_ascent >= r
                    and len(nonfinal) >= s
                    and all(d == 1 for d in nonfinal[:s])
                )
            case pathmod.FirstAscentLastAscentsOne(r=r, s=s):
                noninitial = st.ascents[1:]
                return (
                    st.first_ascent >= r
                    and len(noninitial) >= s - 1
                    and all(a == 1 for a in noninitial[len(noninitial) - (s - 1) :])
                )
        raise InvalidInputError(f"unknown constraint {constraint!r}")

    return pred


# ---------------------------------------------------------------------------
# marked high points


def marked_highpoint_histogram(n: int, k: int, allow_large: bool = False) -> list[int]:
    """Histogram, by x-coordinate 1..2n+k, of the marked high points of
    all paths with n+k ups and n downs (not restricted to the first
    quadrant).

    A path of height h gets k marks: the leftmost points at heights
    h, h-1, ..., h-k+1.  The returned list has 2n+k entries; entry i
    counts marks at x-coordinate i+1.
    """
    if k < 1 or n < 0:
        raise InvalidInputError("need n >= 0 and k >= 1")
    if n + k > MAX_MARKED_SIZE and not allow_large:
        raise ResourceLimitError(
            f"n + k = {n + k} over cap {MAX_MARKED_SIZE}; pass allow_large to force"
        )
    length = 2 * n + k
    hist = [0] * length
    for down_positions in itertools.combinations(range(length), n):
        downs = set(down_positions)
        h = 0
        first_at = {}
        for x in range(1, length + 1):
            h += -1 if x - 1 in downs else 1
            if h not in first_at:
                first_at[h] = x
        top = max(first_at)
        for level in range(top - k + 1, top + 1):
            hist[first_at[level] - 1] += 1
    return hist


# ---------------------------------------------------------------------------
# oracle counts for the named formula families

# Keyed by the same family names as formulas.FORMULAS; the test suite
# asserts the two key sets match.
FAMILY_CONDITIONS: dict[str, PermFilter] = {
    "p132-1": (PatternCount((1, 3, 2), 1),),
    "p321-1": (PatternCount((3, 2, 1), 1),),
    "p321-2": (PatternCount((3, 2, 1), 2),),
    "p321-3": (PatternCount((3, 2, 1), 3),),
    "p321-4": (PatternCount((3, 2, 1), 4),),
    "p321-1-last2up": (PatternCount((3, 2, 1), 1), LastRunIncreasing(2)),
    "p321-2-last2up": (PatternCount((3, 2, 1), 2), LastRunIncreasing(2)),
    "simion-schmidt": (PatternCount((1, 2, 3), 0), PatternCount((1, 3, 2), 0)),
    "p123avoid-132-1": (PatternCount((1, 2, 3), 0), PatternCount((1, 3, 2), 1)),
    "p123avoid-132-2": (PatternCount((1, 2, 3), 0), PatternCount((1, 3, 2), 2)),
    "p123avoid-132-3": (PatternCount((1, 2, 3), 0), PatternCount((1, 3, 2), 3)),
    "p123avoid-132-4": (PatternCount((1, 2, 3), 0), PatternCount((1, 3, 2), 4)),
}


def oracle_count(
    family: str, n: int, workers: int | None = None, allow_large: bool = False
) -> int:
    """Count one of the named families by exhaustive enumeration."""
    try:
        conditions = FAMILY_CONDITIONS[family]
    except KeyError:
        raise InvalidInputError(f"unknown family {family!r}") from None
    return count_perms(n, conditions, workers=workers, allow_large=allow_large)
