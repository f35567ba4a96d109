"""Named verification suites: every closed form against the oracle.

Each check cross-validates one claim the package makes: a counting
formula against exhaustive enumeration, a bijection against a full
round-trip and image sweep, or an algebraic identity over a numeric
grid.  Checks are grouped into suites ("formulas", "bijections",
"identities", "series"); "all" runs every suite.  The command-line
``verify`` subcommand and the acceptance tests both drive this module.

``nmax`` scales the work: enumeration sweeps run up to
``min(nmax, cap)`` where the cap keeps state spaces finite, and pure
arithmetic grids run up to ``max(nmax, default)`` so their standard
ranges are always covered.  A failed check reports its first
counterexample.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Callable, Iterable, Sequence

from . import bijections as bij
from . import formulas, oracle, series
from . import paths as pathmod
from .errors import InvalidInputError, VerificationError
from .oracle import FirstEq, PatternCount, count_perms, enumerate_dyck, enumerate_paths
from .paths import ballot, ballot_quotient_form, binomial, catalan, path_stats
from .permutations import avoids, complement, reverse

__all__ = ["CheckResult", "SUITE_NAMES", "run_suite", "format_results"]

SUITE_NAMES = ("formulas", "bijections", "identities", "series")


@dataclasses.dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _fail(message: str) -> None:
    raise VerificationError(message)


def _eq(actual, expected, context: str) -> None:
    if actual != expected:
        _fail(f"{context}: got {actual}, expected {expected}")


# ---------------------------------------------------------------------------
# enumeration helpers (cached; these back several checks)


@functools.lru_cache(maxsize=None)
def _pattern_census(n: int, pattern: tuple[int, ...], kmax: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Permutations of [n] grouped by occurrence count of ``pattern``:
    entry k lists those with exactly k occurrences, for k <= kmax."""
    from .permutations import count_occurrences

    groups: list[list[tuple[int, ...]]] = [[] for _ in range(kmax + 1)]
    for p in itertools.permutations(range(1, n + 1)):
        c = count_occurrences(p, pattern, cap=kmax + 1)
        if c <= kmax:
            groups[c].append(p)
    return tuple(tuple(g) for g in groups)


def _avoiders(n: int, pattern: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return _pattern_census(n, pattern, 0)[0]


@functools.lru_cache(maxsize=None)
def _dyck_list(n: int) -> tuple[str, ...]:
    return tuple(enumerate_dyck(n))


# ---------------------------------------------------------------------------
# formulas suite


def _check_family_vs_oracle(family: str, nmax: int) -> str:
    top = min(nmax, 10)
    for n in range(1, top + 1):
        _eq(formulas.count(family, n), oracle.oracle_count(family, n), f"{family} at n={n}")
    return f"formula = oracle for 1 <= n <= {top}"


def _check_recombination(nmax: int) -> str:
    top = max(nmax, 20)
    for n in range(1, top + 1):
        lhs = formulas.count("p321-2", n)
        rhs = 2 * ballot(8, n - 4) + (ballot(8, n - 4) + ballot(11, n - 6))
        _eq(lhs, rhs, f"two-321 recombination at n={n}")
    return f"split form matches for n <= {top}"


def _check_totals_sanity(nmax: int) -> str:
    import math

    top = min(nmax, 10)
    for n in range(1, top + 1):
        parts = [catalan(n)] + [formulas.count(f"p321-{k}", n) for k in range(1, 5)]
        if any(v < 0 for v in parts):
            _fail(f"negative count at n={n}: {parts}")
        if sum(parts) > math.factorial(n):
            _fail(f"occurrence counts exceed n! at n={n}")
    return f"0 <= sum over k <= 4 of counts <= n! for n <= {top}"


def _check_binomial_reassembly(nmax: int) -> str:
    top = max(nmax, 15)
    for n in range(3, top + 1):
        lhs = sum(
            binomial(2 * n - 2 * k - 4, n - k - 3) * catalan(k) for k in range(n - 2)
        )
        _eq(lhs, binomial(2 * n - 3, n - 3), f"reassembly at n={n}")
    return f"binomial-Catalan sum collapses for n <= {top}"


def _check_first_letter_six(nmax: int) -> str:
    top = min(nmax, 9)
    for n in range(3, top + 1):
        scan = count_perms(
            n + 3, (PatternCount((3, 2, 1), 0), FirstEq(6)), allow_large=True
        )
        _eq(formulas.count("p321-1", n), scan, f"first-letter-6 avoiders at n={n}")
    return f"one-321 count = avoiders of [n+3] starting 6, for n <= {top}"


def _check_avoider_classes(nmax: int) -> str:
    top = min(nmax, 8)
    checked = 0
    for n in range(1, top + 1):
        av = _avoiders(n, (3, 2, 1))

        def scan(pred) -> int:
            return sum(1 for p in av if pred(p))

        for k in range(1, n + 1):
            _eq(
                formulas.count_avoider_class(n, formulas.FirstEntryEq(k)),
                scan(lambda p: p[0] == k),
                f"FirstEntryEq({k}) at n={n}",
            )
        for k in range(0, n + 1):
            _eq(
                formulas.count_avoider_class(n, formulas.FirstEntryGe(k)),
                scan(lambda p: p[0] >= k),
                f"FirstEntryGe({k}) at n={n}",
            )
        for m in range(1, n + 1):
            _eq(
                formulas.count_avoider_class(n, formulas.OneNotBeforePos(m)),
                scan(lambda p: p.index(1) + 1 >= m),
                f"OneNotBeforePos({m}) at n={n}",
            )
            _eq(
                formulas.count_avoider_class(n, formulas.MaxNotAfterPosFromEnd(m)),
                scan(lambda p: n - p.index(n) >= m),
                f"MaxNotAfterPosFromEnd({m}) at n={n}",
            )
        for v in range(1, n + 1):
            _eq(
                formulas.count_avoider_class(n, formulas.LastEntryLe(v)),
                scan(lambda p: p[-1] <= v),
                f"LastEntryLe({v}) at n={n}",
            )
        for i in range(1, n + 1):
            _eq(
                formulas.count_avoider_class(n, formulas.LastIIncreasing(i)),
                scan(lambda p: all(p[j] < p[j + 1] for j in range(n - i, n - 1))),
                f"LastIIncreasing({i}) at n={n}",
            )
        _eq(
            formulas.count_avoider_class(n, formulas.FirstGe2AndLastLeNminus1()),
            scan(lambda p: p[0] >= 2 and p[-1] <= n - 1),
            f"FirstGe2AndLastLeNminus1 at n={n}",
        )
        checked += 6 * n + 2
    return f"{checked} constrained-class counts match scans for n <= {top}"


# ---------------------------------------------------------------------------
# bijections suite


def _check_records_bijection(nmax: int) -> str:
    top = min(nmax, 9)
    for n in range(1, top + 1):
        av = _avoiders(n, (3, 2, 1))
        images = []
        for p in av:
            d = bij.records_to_dyck(p)
            _eq(bij.dyck_to_records(d), p, f"records round-trip at {p}")
            st = path_stats(d)
            _eq(st.first_ascent, p[0], f"first ascent vs first letter at {p}")
            _eq(st.last_descent, n - p.index(n), f"last descent vs position of max at {p}")
            images.append(d)
        if len(set(images)) != len(images):
            _fail(f"records map not injective at n={n}")
        _eq(sorted(images), sorted(_dyck_list(n)), f"records image at n={n}")
    return f"avoiders <-> Dyck paths with matched statistics, n <= {top}"


def _check_returns_bijection(nmax: int) -> str:
    cap = min(nmax, 10)
    by_len: dict[int, list[str]] = {0: [""]}
    for length in range(1, cap + 1):
        by_len[length] = [
            q
            for u in range(length // 2, length + 1)
            for q in enumerate_paths(u, length - u, lo=0)
        ]
    # forward: every nonempty first-quadrant path starting U deletes and
    # reinserts to itself
    seen: set[tuple[str, int]] = set()
    for length in range(1, cap + 1):
        for r in by_len[length]:
            if not r.startswith("U"):
                continue
            q = bij.delete_returns(r)
            j = path_stats(r).returns
            _eq(bij.insert_returns(q, j), r, f"returns round-trip at {r!r}")
            seen.add((q, j))
    # backward: every (path, level) pair in range is hit exactly once
    expected: set[tuple[str, int]] = set()
    for length in range(0, cap):
        for q in by_len[length]:
            st = path_stats(q)
            for j in range(0, st.ups - st.downs + 2):
                if length + 1 + j <= cap:
                    expected.add((q, j))
    for q, j in expected:
        r = bij.insert_returns(q, j)
        _eq(bij.delete_returns(r), q, f"insertion inverse at {(q, j)}")
    _eq(sorted(seen), sorted(expected), "returns (path, level) coverage")
    return f"deletion <-> insertion over all paths with <= {cap} steps"


def _check_transfer_bijection(nmax: int) -> str:
    top = min(nmax, 10)
    imax = 3
    for n in range(1, top + 1):
        dycks = _dyck_list(n)
        stats = {d: path_stats(d) for d in dycks}
        for i in range(1, imax + 1):
            domain = []
            for d in dycks:
                st = stats[d]
                nonfinal = st.descents[:-1]
                if len(nonfinal) < i or any(v != 1 for v in nonfinal[:i]):
                    continue
                if len(st.descents) == i + 1 and st.ascents[-1] == 1:
                    continue
                domain.append(d)
            images = []
            for d in domain:
                e = bij.transfer_upsteps(d, i)
                _eq(bij.transfer_upsteps_inverse(e, i), d, f"transfer round-trip {d!r} i={i}")
                images.append(e)
            codomain = [
                d
                for d in dycks
                if stats[d].first_ascent >= i + 1
                and stats[d].downs - stats[d].last_descent >= i
            ]
            _eq(sorted(images), sorted(codomain), f"transfer image n={n} i={i}")
            for e in codomain:
                _eq(bij.transfer_upsteps(bij.transfer_upsteps_inverse(e, i), i), e,
                    f"transfer inverse round-trip {e!r} i={i}")
    return f"upstep transfer is a matched pair for semilength <= {top}, i <= {imax}"


def _check_rotate_bijection(nmax: int) -> str:
    top = min(nmax, 8)
    for n in range(2, top + 1):
        av = _avoiders(n, (3, 2, 1))
        for i in range(1, n):
            domain = [
                p for p in av if all(p[j] < p[j + 1] for j in range(n - i, n - 1))
            ]
            codomain = {p for p in av if p.index(n) + 1 <= n - i + 1}
            images = []
            for p in domain:
                q = bij.tail_rotate(p, i)
                _eq(bij.tail_rotate_inverse(q, i), p, f"rotation round-trip {p} i={i}")
                images.append(q)
            if set(images) != codomain or len(set(images)) != len(images):
                _fail(f"rotation image mismatch at n={n}, i={i}")
    return f"tail rotation matches increasing-tail and max-position classes, n <= {top}"


def _adjacent_class(m: int) -> list[tuple[int, ...]]:
    out = []
    for p in _pattern_census(m, (1, 3, 2), 1)[1]:
        occ = next(iter(_occ132(p)))
        i1, i2, i3 = occ.positions
        a, c, b = occ.letters
        if i2 == i1 + 1 and i3 == i2 + 1 and b == a + 1:
            out.append(p)
    return out


def _boundary_class(m: int) -> list[tuple[int, ...]]:
    out = []
    for p in _pattern_census(m, (1, 3, 2), 1)[1]:
        occ = next(iter(_occ132(p)))
        if occ.positions == (0, 1, m - 1) and occ.letters == (m - 2, m, m - 1):
            out.append(p)
    return out


def _occ132(p: tuple[int, ...]):
    from .permutations import occurrences

    return occurrences(p, (1, 3, 2))


def _check_adjacent_132(nmax: int) -> str:
    top = min(nmax, 8)
    for n in range(3, top + 1):
        domain = _adjacent_class(n)
        images = []
        for p in domain:
            rho, k = bij.split_adjacent_132(p)
            _eq(bij.join_adjacent_132(rho, k), p, f"adjacent split round-trip at {p}")
            images.append((rho, k))
        expected = [
            (rho, k)
            for rho in _avoiders(n - 2, (1, 3, 2))
            for k in range(1, n - 1)
        ]
        _eq(sorted(images), sorted(expected), f"adjacent image at n={n}")
    return f"adjacent-132 class <-> (avoider, position) pairs, n <= {top}"


def _check_boundary_132(nmax: int) -> str:
    top = min(nmax, 8)
    for n in range(3, top + 1):
        domain = _boundary_class(n)
        images = []
        for p in domain:
            w2 = bij.split_boundary_132(p)
            _eq(bij.join_boundary_132(w2), p, f"boundary split round-trip at {p}")
            images.append(w2)
        _eq(sorted(images), sorted(_avoiders(n - 3, (1, 3, 2))), f"boundary image at n={n}")
    return f"boundary-132 class <-> avoiders three sizes down, n <= {top}"


def _check_one132_decomposition(nmax: int) -> str:
    top = min(nmax, 8)
    for n in range(3, top + 1):
        domain = _pattern_census(n, (1, 3, 2), 1)[1]
        images = []
        for p in domain:
            rho, sigma = bij.split_one132(p)
            _eq(bij.join_one132(rho, sigma), p, f"one-132 split round-trip at {p}")
            images.append((rho, sigma))
        expected = [
            (rho, sigma)
            for m in range(3, n + 1)
            if n + 3 - m >= 3
            for rho in _adjacent_class(m)
            for sigma in _boundary_class(n + 3 - m)
        ]
        _eq(sorted(images), sorted(expected), f"one-132 decomposition image at n={n}")
    return f"one-132 permutations <-> (adjacent, boundary) pairs, n <= {top}"


def _one321_codomain(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for b in range(2, n):
        for rho in _avoiders(b, (3, 2, 1)):
            if rho[-1] > b - 1:
                continue
            for sigma in _avoiders(n - b + 1, (3, 2, 1)):
                if sigma[0] >= 2:
                    out.append((rho, sigma))
    return out


def _check_one321_decomposition(nmax: int) -> str:
    top = min(nmax, 8)
    for n in range(3, top + 1):
        domain = _pattern_census(n, (3, 2, 1), 1)[1]
        images = []
        for p in domain:
            rho, sigma = bij.split_one321(p)
            _eq(bij.join_one321(rho, sigma), p, f"one-321 split round-trip at {p}")
            images.append((rho, sigma))
        _eq(sorted(images), sorted(_one321_codomain(n)), f"one-321 image at n={n}")
    return f"one-321 permutations <-> avoider pairs, n <= {top}"


def _two321_kind(p: tuple[int, ...]) -> str:
    from .permutations import occurrences

    occs = list(occurrences(p, (3, 2, 1)))
    (c1, b1, a1), (c2, b2, a2) = sorted(
        (o.letters for o in occs), key=lambda t: (t[1], t[0], t[2])
    )
    if b1 != b2:
        return "distinct"
    return "shared-bottom" if a1 == a2 else "shared-top"


def _two321_shared_codomain(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for b in range(2, n):
        for rho in _avoiders(b + 1, (3, 2, 1)):
            if rho[-1] > b - 1:
                continue
            for sigma in _avoiders(n - b + 1, (3, 2, 1)):
                if sigma.index(1) >= 2:
                    out.append((rho, sigma))
    return out


def _two321_distinct_codomain(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for k in range(0, n - 3):
        sigmas = [
            s
            for s in _avoiders(k + 2, (3, 2, 1))
            if s[0] >= 2 and s[-1] <= k + 1
        ]
        rhos = _pattern_census(n - k - 1, (3, 2, 1), 1)[1]
        out.extend((r, s) for r in rhos for s in sigmas)
    return out


def _check_two321_decompositions(nmax: int) -> str:
    top = min(nmax, 8)
    for n in range(4, top + 1):
        domain = _pattern_census(n, (3, 2, 1), 2)[2]
        shared, mirrored, distinct = [], [], []
        for p in domain:
            kind = _two321_kind(p)
            if kind == "shared-bottom":
                shared.append(p)
            elif kind == "shared-top":
                mirrored.append(p)
            else:
                distinct.append(p)
        # shared bottom letter: direct decomposition
        images = []
        for p in shared:
            rho, sigma = bij.split_two321_shared(p)
            _eq(bij.join_two321_shared(rho, sigma), p, f"shared split round-trip at {p}")
            images.append((rho, sigma))
        _eq(sorted(images), sorted(_two321_shared_codomain(n)), f"shared image at n={n}")
        # shared top letter: reverse-complement carries it to the first kind
        for p in mirrored:
            q = reverse(complement(p))
            if _two321_kind(q) != "shared-bottom":
                _fail(f"reverse-complement did not normalize {p}")
            rho, sigma = bij.split_two321_shared(q)
            _eq(bij.join_two321_shared(rho, sigma), q, f"mirrored round-trip at {p}")
        _eq(len(mirrored), len(shared), f"mirror classes sizes at n={n}")
        # distinct middle letters
        images = []
        for p in distinct:
            rho, sigma = bij.split_two321_distinct(p)
            _eq(bij.join_two321_distinct(rho, sigma), p, f"distinct split round-trip at {p}")
            images.append((rho, sigma))
        _eq(sorted(images), sorted(_two321_distinct_codomain(n)), f"distinct image at n={n}")
        total = len(shared) + len(mirrored) + len(distinct)
        _eq(total, formulas.count("p321-2", n), f"two-321 class partition at n={n}")
    return f"both two-321 decompositions cover their classes, n <= {top}"


# ---------------------------------------------------------------------------
# identities suite


def _check_ballot_dual_forms(nmax: int) -> str:
    ntop, ktop = max(nmax, 50), 25
    for k in range(1, ktop + 1):
        for n in range(0, ntop + 1):
            lhs = ballot(k, n)
            _eq(
                lhs,
                binomial(2 * n + k - 1, n) - binomial(2 * n + k - 1, n - 1),
                f"difference form at k={k}, n={n}",
            )
            _eq(lhs, ballot_quotient_form(k, n), f"quotient form at k={k}, n={n}")
    for n in range(0, ntop + 1):
        _eq(catalan(n), ballot(1, n), f"catalan as first column at n={n}")
        if n >= 1:
            _eq(catalan(n), ballot(2, n - 1), f"catalan as second column at n={n}")
    return f"both closed forms agree for n <= {ntop}, k <= {ktop}"


def _check_convolution(nmax: int) -> str:
    ntop = max(nmax, 20)
    for r in range(1, 12):
        for s in range(1, 13 - r):
            for n in range(0, ntop + 1):
                lhs = sum(ballot(r, k) * ballot(s, n - k) for k in range(n + 1))
                _eq(lhs, ballot(r + s, n), f"convolution at r={r}, s={s}, n={n}")
    return f"power convolution for r+s <= 12, n <= {ntop}"


def _check_alternating_sum(nmax: int) -> str:
    ktop = max(nmax, 25)
    for k in range(1, ktop + 1):
        for m in range(0, k):
            lhs = sum(ballot(k - 2 * j, j) for j in range(min(m, k - m - 1) + 1))
            _eq(lhs, binomial(k - 1, m), f"diagonal sum at k={k}, m={m}")
    return f"diagonal sums give binomials for k <= {ktop}"


def _check_contiguous_recurrences(nmax: int) -> str:
    ntop, ktop = max(nmax, 20), 25
    for k in range(1, ktop + 1):
        for n in range(0, ntop + 1):
            _eq(
                ballot(k, n) - ballot(k - 1, n),
                ballot(k + 1, n - 1),
                f"column difference at k={k}, n={n}",
            )
            if k >= 2:
                _eq(
                    ballot(k, n) - ballot(k, n - 1),
                    ballot(k - 2, n) + ballot(k + 1, n - 1),
                    f"row difference at k={k}, n={n}",
                )
            _eq(
                sum(ballot(k + j, n - j) for j in range(n + 1)),
                ballot(k + 1, n),
                f"diagonal accumulation at k={k}, n={n}",
            )
    return f"three contiguous recurrences for n <= {ntop}, k <= {ktop}"


def _check_catalan_binomial_sum(nmax: int) -> str:
    mtop = max(nmax, 15)
    for m in range(1, mtop + 1):
        lhs = sum(
            binomial(2 * m - 2 * k, m - 1 - k) * catalan(k) for k in range(m)
        )
        _eq(lhs, binomial(2 * m + 1, m - 1), f"catalan-binomial sum at m={m}")
    return f"catalan-binomial sum for m <= {mtop}"


def _check_lastascents_forms(nmax: int) -> str:
    ntop = max(nmax, 12)
    for n in range(0, ntop + 1):
        for r in range(1, 6):
            for s in range(1, 6):
                _eq(
                    pathmod.count_lastascents_F(n, r, s),
                    pathmod.count_lastascents_G(n, r, s),
                    f"two closed forms at n={n}, r={r}, s={s}",
                )
    return f"both last-ascents forms agree for n <= {ntop}, r, s <= 5"


def _check_dyck_class_counts(nmax: int) -> str:
    top = min(nmax, 8)
    pmax = 4
    constraints: list[pathmod.DyckClassConstraint] = []
    for k in range(1, pmax + 1):
        constraints.append(pathmod.FirstAscentEq(k))
    for k in range(0, pmax + 1):
        constraints.append(pathmod.FirstAscentGe(k))
    for r in range(1, pmax + 1):
        for s in range(1, pmax + 1):
            constraints.append(pathmod.FirstAscentLastDescent(r, s, True))
            constraints.append(pathmod.FirstAscentLastDescent(r, s, False))
            constraints.append(pathmod.FirstAscentNonfinalDescentsOne(r, s))
            constraints.append(pathmod.FirstAscentLastAscentsOne(r, s))
    for n in range(0, top + 1):
        for c in constraints:
            _eq(
                pathmod.count_dyck_class(n, c),
                oracle.count_dyck_class_oracle(n, c),
                f"class count at n={n}, {c}",
            )
    return f"{len(constraints)} constrained classes match enumeration for n <= {top}"


# ---------------------------------------------------------------------------
# series suite


def _check_bounded_height(nmax: int) -> str:
    top = min(nmax, 12)
    hmax = 6
    for n in range(0, top + 1):
        heights = [max(pathmod.heights(d), default=0) for d in _dyck_list(n)]
        for h in range(0, hmax + 1):
            _eq(
                series.bounded_height_count(n, h),
                sum(1 for v in heights if v <= h),
                f"bounded height at n={n}, h={h}",
            )
    return f"height-bounded counts match enumeration for n <= {top}, h <= {hmax}"


def _check_corridor(nmax: int) -> str:
    top = min(nmax, 8)
    hmax, rsmax = 4, 3
    for n in range(0, top + 1):
        for h in range(1, hmax + 1):
            # min/max prefix height of every unconstrained word once,
            # then each corridor is a pair of comparisons
            extremes = [
                (min(pts), max(pts))
                for d in enumerate_paths(n + h - 1, n, lo=None, hi=None)
                for pts in [(0,) + pathmod.heights(d)]
            ]
            for r in range(0, rsmax + 1):
                for s in range(0, rsmax + 1):
                    _eq(
                        series.corridor_count(n, h, r, s),
                        sum(1 for lo, hi in extremes if lo >= -r and hi <= s + h - 1),
                        f"corridor at n={n}, h={h}, r={r}, s={s}",
                    )
    return f"corridor counts match enumeration for n <= {top}, h <= {hmax}, r, s <= {rsmax}"


def _check_triangle_inverse(nmax: int) -> str:
    size = max(nmax, 10)
    t = series.catalan_triangle(size)
    inv = series.catalan_triangle_inverse(size)
    for i in range(size + 1):
        for j in range(size + 1):
            dot = sum(t[i][k] * inv[k][j] for k in range(size + 1))
            _eq(dot, int(i == j), f"product entry ({i}, {j})")
    return f"triangle times closed-form inverse is the identity, size {size + 1}"


def _check_inverse_rows_vs_q(nmax: int) -> str:
    size = max(nmax, 10)
    inv = series.catalan_triangle_inverse(size)
    for n in range(size + 1):
        q = series.chebyshev_q(n)
        for j, coeff in enumerate(q):
            _eq(inv[n][n - j], coeff, f"row {n}, power {j}")
        for k in range(n - len(q) + 1):
            _eq(inv[n][k], 0, f"row {n}, column {k} should vanish")
    return f"inverse rows hold the q coefficients for n <= {size}"


def _check_q_factorization(nmax: int) -> str:
    htop = max(nmax, 8)
    for h in range(1, htop + 1):
        _eq(
            series.chebyshev_q(2 * h - 1),
            series.poly_mul(series.chebyshev_p(h), series.chebyshev_q(h - 1)),
            f"factorization at h={h}",
        )
    return f"q(2h-1) = p(h) q(h-1) for h <= {htop}"


def _check_marked_uniformity(nmax: int) -> str:
    cap = min(nmax, 10)
    pairs = 0
    for total in range(1, cap + 1):
        for k in range(1, total + 1):
            n = total - k
            hist = oracle.marked_highpoint_histogram(n, k)
            if len(set(hist)) != 1:
                _fail(f"nonuniform histogram at n={n}, k={k}: {hist}")
            pairs += 1
    return f"{pairs} mark histograms uniform for n + k <= {cap}"


# ---------------------------------------------------------------------------
# suite registry and runner

_CHECKS: dict[str, list[tuple[str, Callable[[int], str]]]] = {
    "formulas": [
        *[
            (f"family-{family}", functools.partial(_check_family_vs_oracle, family))
            for family in formulas.FORMULAS
        ],
        ("two321-recombination", _check_recombination),
        ("occurrence-totals-sanity", _check_totals_sanity),
        ("binomial-reassembly", _check_binomial_reassembly),
        ("first-letter-six", _check_first_letter_six),
        ("avoider-classes", _check_avoider_classes),
    ],
    "bijections": [
        ("records-to-dyck", _check_records_bijection),
        ("return-deletion", _check_returns_bijection),
        ("upstep-transfer", _check_transfer_bijection),
        ("tail-rotation", _check_rotate_bijection),
        ("adjacent-132", _check_adjacent_132),
        ("boundary-132", _check_boundary_132),
        ("one-132-decomposition", _check_one132_decomposition),
        ("one-321-decomposition", _check_one321_decomposition),
        ("two-321-decompositions", _check_two321_decompositions),
    ],
    "identities": [
        ("ballot-dual-forms", _check_ballot_dual_forms),
        ("ballot-convolution", _check_convolution),
        ("ballot-diagonal-sums", _check_alternating_sum),
        ("ballot-recurrences", _check_contiguous_recurrences),
        ("catalan-binomial-sum", _check_catalan_binomial_sum),
        ("lastascents-two-forms", _check_lastascents_forms),
        ("dyck-class-counts", _check_dyck_class_counts),
    ],
    "series": [
        ("bounded-height", _check_bounded_height),
        ("corridor-counts", _check_corridor),
        ("triangle-inverse", _check_triangle_inverse),
        ("inverse-rows-coefficients", _check_inverse_rows_vs_q),
        ("chebyshev-factorization", _check_q_factorization),
        ("marked-uniformity", _check_marked_uniformity),
    ],
}


def run_suite(suite: str, nmax: int) -> list[CheckResult]:
    """Run one named suite (or "all") up to size nmax; never raises on a
    failed check, only on an unknown suite or invalid nmax."""
    if suite != "all" and suite not in _CHECKS:
        raise InvalidInputError(
            f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)} or all"
        )
    if nmax < 1:
        raise InvalidInputError("nmax must be >= 1")
    names = SUITE_NAMES if suite == "all" else (suite,)
    results = []
    for group in names:
        for name, check in _CHECKS[group]:
            try:
                detail = check(nmax)
                results.append(CheckResult(group, name, True, detail))
            except VerificationError as e:
                results.append(CheckResult(group, name, False, str(e)))
            except Exception as e:  # pragma: no cover - defensive
                results.append(CheckResult(group, name, False, f"{type(e).__name__}: {e}"))
    return results


def format_results(results: Iterable[CheckResult]) -> str:
    lines = []
    passed = failed = 0
    for r in results:
        mark = "pass" if r.passed else "FAIL"
        lines.append(f"[{mark}] {r.suite}/{r.name}: {r.detail}")
        if r.passed:
            passed += 1
        else:
            failed += 1
    lines.append(f"{passed} passed, {failed} failed")
    return "\n".join(lines)
