"""Shared pytest wiring: the acceptance-criteria summary block.

After any run that touched tests/test_acceptance.py, print one
PASS/FAIL line per numbered criterion so the outcome of the whole
acceptance checklist is readable at a glance.
"""

import re

CRITERIA = {
    1: "binomial closed form for one 132 matches oracle, 3 <= n <= 10, n=10 under 60 s",
    2: "ballot closed form for one 321 matches oracle, 3 <= n <= 10",
    3: "two-321 closed form matches oracle, 4 <= n <= 10, spot value 133 at n=6",
    4: "three- and four-321 closed forms match oracle through n = 10",
    5: "last-two-rising variants match the filtered oracle through n = 10",
    6: "2^(n-1) avoidance count and the four one-123 forms match oracle through n = 10",
    7: "bijection round-trips and image-equals-codomain at full published sizes",
    8: "ballot identity suites hold over their full stated ranges",
    9: "series counts match enumeration; triangle inverse and factorization hold",
    10: "marked-path high-point histogram is uniform for all n + k <= 10",
    11: "verify --suite all fits the time budget at nmax 9 and 10",
}

_NODE_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    seen = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            m = _NODE_RE.search(getattr(report, "nodeid", ""))
            if m:
                seen[int(m.group(1))] = outcome == "passed"
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(seen):
        verdict = "PASS" if seen[number] else "FAIL"
        text = CRITERIA.get(number, "(unnumbered)")
        terminalreporter.write_line(f"{verdict}  criterion {number:2d}: {text}")
