"""Shared generators and checkers for the test suite.

All randomness is seeded `random.Random` so every run is reproducible.
"""

import itertools
import random
from collections import Counter

from prodmat import CoherenceError, Leaf, Matrix, OneSum, TwoSum
from prodmat.matroids import expr_size, expr_to_slack_with_bases


def random_matrix(rng, m, n, lo=0, hi=3):
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)])


def random_leaf(rng, dmax=6):
    d = rng.randint(2, dmax)
    return Leaf(d, rng.randint(1, d - 1))


def random_expr(rng, budget, dmax=6):
    if budget == 1:
        return random_leaf(rng, dmax)
    c = rng.random()
    if c < 0.3:
        return random_leaf(rng, dmax)
    if c < 0.55:
        t = rng.randint(2, min(3, budget))
        rem, parts = budget, []
        for i in range(t):
            take = rng.randint(1, rem - (t - 1 - i)) if i < t - 1 else rem
            parts.append(random_expr(rng, take, dmax))
            rem -= take
        return OneSum(tuple(parts))
    lb = rng.randint(1, budget - 1)
    left = random_expr(rng, lb, dmax)
    right = random_expr(rng, budget - lb, dmax)
    return TwoSum(left, right, rng.randrange(expr_size(left)), rng.randrange(expr_size(right)))


def random_feasible_expr(rng, max_leaves=5, dmax=6, max_cols=600, max_rows=40):
    """A coherence-feasible expression with a desk-scale slack matrix."""
    while True:
        try:
            e = random_expr(rng, rng.randint(1, max_leaves), dmax)
            S, bases = expr_to_slack_with_bases(e)
        except (CoherenceError, ValueError):
            continue
        if S.n > max_cols or S.m > max_rows:
            continue
        return e, S, bases


def top_components(expr):
    return list(expr.parts) if isinstance(expr, OneSum) else [expr]


def base_families_match(orig_col_bases, rec):
    """Recovered base family equals the original's up to per-factor dualization.

    Elements are matched through their column-membership vectors; each
    irreducible component of the recovered expression may be flipped as a
    whole (a slack matrix determines a factor only up to its dual).
    """
    n = len(rec.col_bases)
    comps, off = [], 0
    for part in top_components(rec.expr):
        s = expr_size(part)
        comps.append(list(range(off, off + s)))
        off += s
    ground = sorted({x for b in orig_col_bases for x in b})
    target = Counter(
        tuple(1 if e in orig_col_bases[j] else 0 for j in range(n)) for e in ground
    )
    rvec = {
        e: tuple(1 if e in rec.col_bases[j] else 0 for j in range(n))
        for e in range(rec.size)
    }
    for flips in itertools.product([0, 1], repeat=len(comps)):
        got = Counter()
        for ci, comp in enumerate(comps):
            for e in comp:
                v = rvec[e]
                got[tuple(1 - x for x in v) if flips[ci] else v] += 1
        if got == target:
            return True
    return False


def random_cut_oracle_edges(rng, nv, wmax=5, p=0.5):
    edges = []
    for u in range(nv):
        for w in range(u + 1, nv):
            if rng.random() < p:
                edges.append((u, w, rng.randint(1, wmax)))
    return edges
