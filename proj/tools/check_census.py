#!/usr/bin/env python3
"""Cross-check a census JSON-lines stream produced by `firebreak gap scan`.

Reads records of the form

  {"n":13,"tree":"13\\n- 0 1 2 ...","m":8,"m_star":"17/2","gap":"1/2"}

from stdin (or the files named on the command line) and verifies, for
every record:

  * the tree text parses and its vertex count matches "n",
  * "m" equals an independent brute-force optimum computed here, by
    maximizing total subtree weight over vertex sets with at most one
    vertex per level and no vertex an ancestor of another,
  * "gap" equals m_star - m as an exact fraction, and the gap is >= 0.

The brute force shares no code with the C++ solver, so agreement means
the integral optimum in the stream is trustworthy.  m_star itself is
not recomputed; its consistency is checked through the gap arithmetic.

Exits 0 if every record checks out, 1 otherwise.
"""

import json
import sys
from fractions import Fraction


def parse_tree(text):
    """Parse the two-line tree format into a parent array."""
    lines = text.split("\n")
    if len(lines) != 2:
        raise ValueError(f"expected 2 lines, got {len(lines)}")
    n = int(lines[0])
    tokens = lines[1].split()
    if len(tokens) != n or tokens[0] != "-":
        raise ValueError("malformed parent line")
    parent = [-1] + [int(t) for t in tokens[1:]]
    for v in range(1, n):
        if not 0 <= parent[v] < v:
            raise ValueError(f"parent[{v}] out of range")
    return parent


def brute_force_optimum(parent):
    """Max total subtree weight, one vertex per level, no nested picks."""
    n = len(parent)
    level = [0] * n
    weight = [1] * n
    for v in range(1, n):
        level[v] = level[parent[v]] + 1
    for v in range(n - 1, 0, -1):
        weight[parent[v]] += weight[v]

    max_level = max(level)
    by_level = [[] for _ in range(max_level + 1)]
    for v in range(1, n):
        by_level[level[v]].append(v)

    def is_ancestor(a, v):
        while v != -1:
            if v == a:
                return True
            v = parent[v]
        return False

    best = 0

    def rec(lvl, chosen, saved):
        nonlocal best
        best = max(best, saved)
        if lvl > max_level:
            return
        rec(lvl + 1, chosen, saved)
        for v in by_level[lvl]:
            if any(is_ancestor(a, v) for a in chosen):
                continue
            chosen.append(v)
            rec(lvl + 1, chosen, saved + weight[v])
            chosen.pop()

    rec(1, [], 0)
    return best


def check_record(rec, where):
    problems = []
    try:
        parent = parse_tree(rec["tree"])
    except (ValueError, KeyError) as e:
        return [f"{where}: bad tree text: {e}"]
    if len(parent) != rec["n"]:
        problems.append(f"{where}: n={rec['n']} but tree has {len(parent)} vertices")

    m = brute_force_optimum(parent)
    if m != rec["m"]:
        problems.append(f"{where}: m={rec['m']} but brute force gives {m}")

    m_star = Fraction(rec["m_star"])
    gap = Fraction(rec["gap"])
    if m_star - rec["m"] != gap:
        problems.append(f"{where}: gap={gap} but m_star - m = {m_star - rec['m']}")
    if gap < 0:
        problems.append(f"{where}: negative gap {gap}")
    return problems


def main():
    sources = sys.argv[1:] or ["-"]
    records = 0
    problems = []
    for src in sources:
        stream = sys.stdin if src == "-" else open(src)
        with stream:
            for lineno, line in enumerate(stream, 1):
                line = line.strip()
                if not line:
                    continue
                records += 1
                where = f"{src}:{lineno}"
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError as e:
                    problems.append(f"{where}: not valid JSON: {e}")
                    continue
                problems.extend(check_record(rec, where))

    for p in problems:
        print(p, file=sys.stderr)
    print(f"{records} records, {len(problems)} problems")
    return 0 if not problems else 1


if __name__ == "__main__":
    sys.exit(main())
