"""Empirical column distribution of a matrix and its mutual-information function.

A uniformly random column C of an m x n matrix S induces, for every row
subset X, the random vector C_X (the column restricted to X).  The set
function

    f(X) = I(C_X ; C_complement(X))        (bits)

is nonnegative, symmetric and submodular, and f(X) = 0 exactly when the
column multiset of S factors over the row bipartition (X, complement).
Float evaluation of f goes through entropies; the zero decision is never
made on floats -- `is_independent_exact` checks the integer identity
n*mu(a,b) == mu_X(a)*mu_Xc(b) over all pattern pairs.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .matrix import Matrix

#: float screening threshold; values above it cannot be zeros of f.
ZERO_EPS = 1e-9

_WEIGHT_SEED = 0x51AC_0DE5


class MultiplicityTable:
    """Counts of distinct column patterns restricted to a row subset."""

    def __init__(self, subset: tuple, counts: dict, total: int):
        self.subset = subset
        self.counts = counts
        self.total = total
        assert sum(counts.values()) == total

    def __eq__(self, other):
        return (
            isinstance(other, MultiplicityTable)
            and self.counts == other.counts
            and self.total == other.total
        )

    def __repr__(self):
        return f"MultiplicityTable(|X|={len(self.subset)}, k={len(self.counts)}, n={self.total})"


def multiplicity_table(S: Matrix, X: Iterable[int]) -> MultiplicityTable:
    """Empirical distribution of columns of S restricted to rows X.

    X may be empty (degenerate single-pattern table, used internally).
    """
    X = tuple(sorted(set(X)))
    if X and (X[0] < 0 or X[-1] >= S.m):
        raise IndexError(f"row subset out of range: {X}")
    counts = {}
    for j in range(S.n):
        key = tuple(S.rows[i][j] for i in X)
        counts[key] = counts.get(key, 0) + 1
    return MultiplicityTable(X, counts, S.n)


def entropy(table: MultiplicityTable) -> float:
    """Shannon entropy in bits: -sum (mu/n) log2(mu/n)."""
    n = table.total
    if n < 1:
        raise ValueError("empty table")
    return math.log2(n) - sum(c * math.log2(c) for c in table.counts.values()) / n


def _entropy_from_counts(counts: np.ndarray, n: int) -> float:
    return math.log2(n) - float((counts * np.log2(counts)).sum()) / n


class InfoFunction:
    """f(X) = I(C_X; C_Xc) for a fixed matrix, with fast grouped evaluation.

    Columns are grouped by 64-bit additive signatures (random per-cell
    weights, summed over the chosen rows) for the float path; the weights are
    seeded deterministically, so evaluation is reproducible.  All exact
    decisions use exact pattern keys instead.
    """

    def __init__(self, S: Matrix):
        self.S = S
        m, n = S.m, S.n
        self.m = m
        self.n = n
        # per-row small-integer codes for the entries (first-occurrence order)
        codes = np.empty((m, n), dtype=np.int64)
        binary = True
        for i, row in enumerate(S.rows):
            seen = {}
            for j, x in enumerate(row):
                c = seen.setdefault(x, len(seen))
                codes[i, j] = c
            if binary and any(x != 0 and x != 1 for x in row):
                binary = False
        self.codes = codes
        self.binary = S.is_zero_one()
        rng = np.random.Generator(np.random.PCG64(_WEIGHT_SEED))
        ncodes = int(codes.max()) + 1
        weights = rng.integers(0, 1 << 63, size=(m, ncodes), dtype=np.uint64)
        weights = weights * np.uint64(2) + np.uint64(1)  # odd: distinct per cell in practice
        self.cell_sig = np.take_along_axis(weights, codes.astype(np.intp), axis=1).astype(np.uint64)
        self.sig_all = self.cell_sig.sum(axis=0, dtype=np.uint64)
        self.h_full = self._h_sig(self.sig_all)
        self._sig_cache = {}
        self._h_cache = {}
        self._exact_cache = {}
        self._full_groups = None

    # -- float path ---------------------------------------------------------

    def _h_sig(self, sig: np.ndarray) -> float:
        _, counts = np.unique(sig, return_counts=True)
        return _entropy_from_counts(counts, self.n)

    def sig(self, X: tuple) -> np.ndarray:
        """Additive signature vector of a row subset (cached)."""
        got = self._sig_cache.get(X)
        if got is None:
            if len(X) == 0:
                got = np.zeros(self.n, dtype=np.uint64)
            elif len(X) == 1:
                got = self.cell_sig[X[0]]
            else:
                got = self.cell_sig[list(X)].sum(axis=0, dtype=np.uint64)
            self._sig_cache[X] = got
        return got

    def entropy_of(self, X: Iterable[int]) -> float:
        X = tuple(sorted(set(X)))
        got = self._h_cache.get(X)
        if got is None:
            got = self._h_sig(self.sig(X))
            self._h_cache[X] = got
        return got

    def f(self, X: Iterable[int]) -> float:
        """H(C_X) + H(C_Xc) - H(C); symmetric in X by construction."""
        X = tuple(sorted(set(X)))
        Xc = tuple(i for i in range(self.m) if i not in set(X))
        return self.entropy_of(X) + self.entropy_of(Xc) - self.h_full

    # -- exact path ----------------------------------------------------------

    def _keys(self, X: tuple):
        """Exact per-column pattern keys for a row subset (numpy or tuples)."""
        if not X:
            return np.zeros(self.n, dtype=np.uint64)
        if self.m <= 64 and self.binary:
            sel = self.codes[list(X)].astype(np.uint64)
            shifts = np.arange(len(X), dtype=np.uint64)[:, None]
            return (sel << shifts).sum(axis=0, dtype=np.uint64)
        return [tuple(self.codes[i, j] for i in X) for j in range(self.n)]

    def _group(self, keys):
        """(group index per column, group count) for exact keys."""
        if isinstance(keys, np.ndarray):
            _, inv, counts = np.unique(keys, return_inverse=True, return_counts=True)
            return inv.astype(np.int64), counts.astype(np.int64)
        seen = {}
        inv = np.empty(self.n, dtype=np.int64)
        counts = []
        for j, k in enumerate(keys):
            g = seen.get(k)
            if g is None:
                g = seen[k] = len(counts)
                counts.append(0)
            inv[j] = g
            counts[g] += 1
        return inv, np.array(counts, dtype=np.int64)

    def is_independent_exact(self, X: Iterable[int]) -> bool:
        """True iff n*mu(a,b) == mu_X(a) * mu_Xc(b) for every pattern pair.

        Unobserved pairs have mu(a,b) = 0, so independence additionally
        forces every pair to occur; both facts are checked with integer
        arithmetic only.
        """
        X = tuple(sorted(set(X)))
        if not X or len(X) >= self.m:
            raise ValueError("X must be a nonempty proper row subset")
        got = self._exact_cache.get(X)
        if got is not None:
            return got
        Xc = tuple(i for i in range(self.m) if i not in set(X))
        inv_a, cnt_a = self._group(self._keys(X))
        inv_b, cnt_b = self._group(self._keys(Xc))
        ka, kb = len(cnt_a), len(cnt_b)
        pairs = inv_a * kb + inv_b
        upairs, joint = np.unique(pairs, return_counts=True)
        ok = len(upairs) == ka * kb
        if ok:
            lhs = joint.astype(object) * self.n
            rhs = cnt_a[(upairs // kb).astype(np.intp)].astype(object) * cnt_b[
                (upairs % kb).astype(np.intp)
            ].astype(object)
            ok = bool((lhs == rhs).all())
        self._exact_cache[X] = ok
        self._exact_cache[Xc] = ok
        return ok


def mutual_info_f(F: InfoFunction, X: Iterable[int]) -> float:
    """f(X) in bits; X may be empty or the full row set (both give 0)."""
    return F.f(X)


def is_independent_exact(F: InfoFunction, X: Iterable[int]) -> bool:
    return F.is_independent_exact(X)


def mutual_info_direct(S: Matrix, X: Iterable[int]) -> float:
    """Reference evaluation of I(C_X; C_Xc) by the double sum over pattern pairs.

    sum_{a,b} p(a,b) log2( p(a,b) / (p(a) p(b)) ); zero terms are skipped.
    Used to cross-check the entropy-based evaluation.
    """
    X = tuple(sorted(set(X)))
    Xc = tuple(i for i in range(S.m) if i not in set(X))
    n = S.n
    joint = {}
    ma = {}
    mb = {}
    for j in range(n):
        a = tuple(S.rows[i][j] for i in X)
        b = tuple(S.rows[i][j] for i in Xc)
        joint[(a, b)] = joint.get((a, b), 0) + 1
        ma[a] = ma.get(a, 0) + 1
        mb[b] = mb.get(b, 0) + 1
    total = 0.0
    for (a, b), c in joint.items():
        total += (c / n) * math.log2(c * n / (ma[a] * mb[b]))
    return total
