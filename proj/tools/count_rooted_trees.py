#!/usr/bin/env python3
"""Regenerate the rooted-tree counts frozen into the test suite.

Two independent methods must agree before a count is trusted:

  exhaustive  enumerate every labeled parent array (parent[i] < i), reduce
              each to its AHU canonical form, and count distinct forms.
              This is the same oracle the unit tests carry, re-expressed
              here so the frozen constants can be regenerated from scratch.

  recurrence  the Euler-transform recurrence for unlabeled rooted trees:
                  a(1) = 1
                  a(n+1) = (1/n) * sum_{k=1..n} c(k) * a(n-k+1)
                  c(k) = sum_{d | k} d * a(d)
              This route never builds a tree, so it shares no code or
              concepts with the enumerator it is checking.

Usage: tools/count_rooted_trees.py [max_n]

Prints one row per n with both counts.  Exhaustive counting is skipped
above EXHAUSTIVE_LIMIT (it visits (n-1)! arrays); the recurrence covers
every requested n.  Exits 1 if the two methods ever disagree.
"""

import sys
from functools import lru_cache

EXHAUSTIVE_LIMIT = 10


def ahu_canonical(parent):
    """Canonical form of the rooted tree given by a parent array."""
    n = len(parent)
    children = [[] for _ in range(n)]
    for v in range(1, n):
        children[parent[v]].append(v)

    def form(v):
        return "(" + "".join(sorted(form(c) for c in children[v])) + ")"

    return form(0)


def count_exhaustive(n):
    """Count distinct rooted trees on n vertices by brute enumeration."""
    if n == 1:
        return 1
    seen = set()
    parent = [0] * n
    parent[0] = -1

    def rec(i):
        if i == n:
            seen.add(ahu_canonical(parent))
            return
        for p in range(i):
            parent[i] = p
            rec(i + 1)

    rec(1)
    return len(seen)


def counts_by_recurrence(max_n):
    """Counts a(1..max_n) of unlabeled rooted trees, no enumeration."""
    a = [0, 1]
    for n in range(1, max_n):
        total = 0
        for k in range(1, n + 1):
            c = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
            total += c * a[n - k + 1]
        assert total % n == 0
        a.append(total // n)
    return a[1:]


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 14
    if max_n < 1:
        print("max_n must be >= 1", file=sys.stderr)
        return 2

    rec = counts_by_recurrence(max_n)
    print(f"{'n':>3} {'exhaustive':>12} {'recurrence':>12}")
    ok = True
    for n in range(1, max_n + 1):
        if n <= EXHAUSTIVE_LIMIT:
            ex = count_exhaustive(n)
            mark = "" if ex == rec[n - 1] else "  MISMATCH"
            ok = ok and ex == rec[n - 1]
            print(f"{n:>3} {ex:>12} {rec[n - 1]:>12}{mark}")
        else:
            print(f"{n:>3} {'-':>12} {rec[n - 1]:>12}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
