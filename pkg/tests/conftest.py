"""Shared fixtures plus the acceptance-criteria terminal summary.

Every test named ``test_criterion_<k>_*`` (in test_acceptance.py) is folded
into a one-line PASS/FAIL verdict per criterion, printed after the run.
"""

from __future__ import annotations

import random
import re

import pytest

from braidsigma import BraidWord


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260825)


@pytest.fixture
def random_word():
    def make(rng: random.Random, n: int, length: int) -> BraidWord:
        letters = []
        for _ in range(length):
            i = rng.randrange(1, n)
            letters.append(i if rng.random() < 0.5 else -i)
        return BraidWord(n, tuple(letters))

    return make


_CRITERION = re.compile(r"test_criterion_(\d+)")

CRITERION_TITLES = {
    1: "winding/crossing and twisted-homomorphism identities",
    2: "Garside engine: relations, Delta facts, rewriting invariance",
    3: "prefix order is isomorphic to the weak order (n <= 5)",
    4: "Rev_n(i,j) acyclic for (i,j) != (1,n), n in {3,4,5}",
    5: "Rev_n(1,n) is an exact homology (n-3)-sphere, n in {3,4,5}",
    6: "nerve and join/meet cross-checks, n in {3..6}",
    7: "one-positive reduction: ascending links match Rev sets",
    8: "chi(m,n) structural checks, 3 <= m <= n <= 6",
    9: "PW_n order complex has the homology of S^{n-2}, n in {3,4}",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    status: dict[int, str] = {}
    rank = {"FAIL": 3, "PASS": 2, "SKIP": 1}
    for outcome, verdict in (("failed", "FAIL"), ("error", "FAIL"),
                             ("passed", "PASS"), ("skipped", "SKIP")):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") not in ("call", "setup"):
                continue
            m = _CRITERION.search(rep.location[2])
            if not m:
                continue
            k = int(m.group(1))
            if rank[verdict] > rank.get(status.get(k, ""), 0):
                status[k] = verdict
    if not status:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for k in sorted(status):
        title = CRITERION_TITLES.get(k, "")
        terminalreporter.write_line(f"criterion {k} ({title}): {status[k]}")
