"""Minimization of symmetric submodular set functions by pendent pairs.

The minimizer repeatedly builds an ordering v1, v2, ..., vk of the current
(merged) elements where each next element minimizes

    key(x) = f(W + x) - f(x),      W = union of the elements placed so far.

The last two elements (t, u) form a pendent pair: f(u) is minimal among all
sets separating u from t.  Recording u as a candidate cut and merging t with
u, m-1 times, visits a candidate achieving the global minimum of f over
nonempty proper subsets.

Float comparisons in the ordering are raw; callers that need an exact zero
re-verify candidates with integer arithmetic downstream.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .info import InfoFunction


class SymmetricOracle:
    """Evaluation wrapper around a symmetric set function on ground set [m].

    `calls` counts every requested evaluation of f (including ones answered
    from a cache), which is what the m^3 budget is asserted against.
    """

    def __init__(self, m: int, fn: Callable[[tuple], float]):
        if m < 1:
            raise ValueError("ground set must be nonempty")
        self.m = m
        self.fn = fn
        self.calls = 0
        self._cache = {}

    def eval(self, X: Sequence[int]) -> float:
        X = tuple(sorted(X))
        self.calls += 1
        got = self._cache.get(X)
        if got is None:
            got = self.fn(X)
            self._cache[X] = got
        return got

    def ordering_keys(self, base: tuple, cands: Sequence[tuple]) -> list:
        """key(c) = f(base + c) - f(c) for each candidate merged element."""
        return [self.eval(base + c) - self.eval(c) for c in cands]


class MatrixInfoOracle(SymmetricOracle):
    """Oracle for the mutual-information function of a matrix.

    Keys are evaluated through cached additive column signatures, so one key
    costs two grouping passes instead of a fresh scan of the matrix.
    """

    def __init__(self, info: InfoFunction):
        super().__init__(info.m, None)
        self.info = info

    def eval(self, X: Sequence[int]) -> float:
        X = tuple(sorted(X))
        self.calls += 1
        got = self._cache.get(X)
        if got is None:
            got = self.info.f(X)
            self._cache[X] = got
        return got

    def ordering_keys(self, base: tuple, cands: Sequence[tuple]) -> list:
        info = self.info
        sig_base = info.sig(base)
        rest = info.sig_all - sig_base
        keys = []
        for c in cands:
            self.calls += 2  # f(base+c) and f(c)
            sig_c = info.sig(c)
            h_fwd = info._h_sig(sig_base + sig_c)
            h_bwd = info._h_sig(rest - sig_c)
            f_join = h_fwd + h_bwd - info.h_full
            keys.append(f_join - self.eval_cached(c))
        return keys

    def eval_cached(self, X: tuple) -> float:
        got = self._cache.get(X)
        if got is None:
            got = self.info.f(X)
            self._cache[X] = got
        return got


class SumOracle(SymmetricOracle):
    """Pointwise sum of symmetric oracles over a common ground set."""

    def __init__(self, parts: Sequence[SymmetricOracle]):
        if not parts or any(p.m != parts[0].m for p in parts):
            raise ValueError("parts must share one ground set")
        super().__init__(parts[0].m, None)
        self.parts = list(parts)

    def eval(self, X: Sequence[int]) -> float:
        X = tuple(sorted(X))
        self.calls += 1
        got = self._cache.get(X)
        if got is None:
            got = sum(p.eval(X) for p in self.parts)
            for p in self.parts:
                p.calls -= 1  # count one logical evaluation of the sum
            self._cache[X] = got
        return got

    def ordering_keys(self, base: tuple, cands: Sequence[tuple]) -> list:
        self.calls += 2 * len(cands)
        acc = None
        for p in self.parts:
            before = p.calls
            ks = p.ordering_keys(base, cands)
            p.calls = before
            acc = ks if acc is None else [a + b for a, b in zip(acc, ks)]
        return acc


def pendent_pair(oracle, elements: Sequence[tuple], start: tuple):
    """Build the key-minimizing ordering from `start`; return its last two elements.

    `elements` are merged elements given as sorted tuples of original
    indices.  Ties in the key minimization break toward the smallest
    representative (first entry).  Guarantee: f(u) equals the minimum of f
    over all sets separating u from t.
    """
    elements = list(elements)
    if len(elements) < 2:
        raise ValueError("need at least 2 elements")
    if start not in elements:
        raise ValueError("start must be one of the elements")
    order = [start]
    base = start
    remaining = [e for e in elements if e != start]
    while remaining:
        keys = oracle.ordering_keys(base, remaining)
        best = min(range(len(remaining)), key=lambda idx: (keys[idx], remaining[idx][0]))
        chosen = remaining.pop(best)
        order.append(chosen)
        base = tuple(sorted(base + chosen))
    return order[-2], order[-1]


def _canonical_cut(X: tuple, m: int) -> tuple:
    Xc = tuple(i for i in range(m) if i not in set(X))
    return min(X, Xc)


def minimize_symmetric_with_candidates(oracle):
    """Full pendent-pair run; returns (argmin, value, all recorded candidates).

    Candidates are the pendent cuts (u's original set, f value), one per
    merge, each canonicalized to the lexicographically smaller of the set and
    its complement.
    """
    m = oracle.m
    if m < 2:
        raise ValueError("need a ground set of size at least 2")
    elements = [(i,) for i in range(m)]
    candidates = []
    while len(elements) > 1:
        start = elements[0]  # smallest representative
        t, u = pendent_pair(oracle, elements, start)
        candidates.append((_canonical_cut(u, m), oracle.eval(u)))
        merged = tuple(sorted(t + u))
        elements = sorted([e for e in elements if e != t and e != u] + [merged])
    best_set, best_val = min(candidates, key=lambda c: (c[1], c[0]))
    return best_set, best_val, candidates


def minimize_symmetric(oracle):
    """Global minimum of a symmetric submodular f over nonempty proper subsets.

    Returns (X, value); deterministic, at most m^3 oracle evaluations.
    """
    X, val, _ = minimize_symmetric_with_candidates(oracle)
    return X, val
