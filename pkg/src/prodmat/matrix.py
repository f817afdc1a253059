"""Dense matrices with exact rational entries and permutational operations.

Entries are `fractions.Fraction`, so column equality (the basis of every
multiplicity count elsewhere) is unambiguous.  Decimal input is converted
exactly (0.25 -> 1/4).  Quantization of noisy real data is the caller's
responsibility; this module never rounds.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

_TOKEN_RE = re.compile(r"^[+-]?(\d+(\.\d+)?|\d+/\d+)$")

ZERO = Fraction(0)
ONE = Fraction(1)


class MatrixFormatError(ValueError):
    """Malformed matrix text or inconsistent dimensions."""


class Matrix:
    """Immutable m x n matrix of Fractions; equality and hashing are entrywise-exact."""

    __slots__ = ("m", "n", "rows", "_hash")

    def __init__(self, rows: Sequence[Sequence[Fraction]]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise MatrixFormatError("matrix must have at least one row and one column")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise MatrixFormatError("ragged rows")
        self.rows = rows
        self.m = len(rows)
        self.n = n
        self._hash = None

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def cols(self) -> list:
        return [self.col(j) for j in range(self.n)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def restrict_cols(self, cols: Sequence[int]) -> "Matrix":
        return self.submatrix(range(self.m), cols)

    def is_zero_one(self) -> bool:
        return all(x == 0 or x == 1 for r in self.rows for x in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.m}x{self.n})"


def _parse_token(tok: str) -> Fraction:
    if not _TOKEN_RE.match(tok):
        raise MatrixFormatError(f"malformed entry {tok!r}")
    return Fraction(tok)


def parse_matrix(text) -> Matrix:
    """Parse the standard text format: a header line "m n", then m rows of n tokens.

    Tokens may be integers, decimals or "p/q"; decimals convert exactly.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty input")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"bad header {lines[0]!r}")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixFormatError(f"bad header {lines[0]!r}")
    if m < 1 or n < 1:
        raise MatrixFormatError("m and n must be at least 1")
    if len(lines) != m + 1:
        raise MatrixFormatError(f"expected {m} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != n:
            raise MatrixFormatError(f"expected {n} entries, found {len(toks)} in {ln!r}")
        rows.append(tuple(_parse_token(t) for t in toks))
    return Matrix(rows)


def format_entry(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def write_matrix(S: Matrix) -> str:
    """Inverse of parse_matrix; integers are written without a denominator."""
    out = [f"{S.m} {S.n}"]
    out.extend(" ".join(format_entry(x) for x in row) for row in S.rows)
    return "\n".join(out) + "\n"


def restrict_rows(S: Matrix, X: Iterable[int]) -> Matrix:
    """Rows of S indexed by X, in ascending order; columns unchanged."""
    X = sorted(set(X))
    if not X:
        raise ValueError("row subset must be nonempty")
    if X[0] < 0 or X[-1] >= S.m:
        raise IndexError(f"row index out of range in {X}")
    return Matrix(tuple(S.rows[i] for i in X))


def check_permutation(perm: Sequence[int], k: int) -> tuple:
    perm = tuple(perm)
    if len(perm) != k or sorted(perm) != list(range(k)):
        raise ValueError(f"not a permutation of range({k}): {perm}")
    return perm


def inverse_permutation(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def permute(S: Matrix, row_perm: Sequence[int], col_perm: Sequence[int]) -> Matrix:
    """result[i][j] = S[row_perm[i]][col_perm[j]]."""
    row_perm = check_permutation(row_perm, S.m)
    col_perm = check_permutation(col_perm, S.n)
    return Matrix(tuple(tuple(S.rows[row_perm[i]][col_perm[j]] for j in range(S.n)) for i in range(S.m)))


def dedupe_rows(S: Matrix):
    """Keep the first occurrence of each distinct row.

    Returns (matrix, keep) where keep[i] is the index, in the result, of the
    kept copy of row i.
    """
    seen = {}
    kept = []
    keep_map = []
    for row in S.rows:
        if row in seen:
            keep_map.append(seen[row])
        else:
            seen[row] = len(kept)
            keep_map.append(len(kept))
            kept.append(row)
    return Matrix(kept), keep_map


def complement_row(row: Sequence[Fraction]) -> tuple:
    """Entrywise 1 - row; requires a 0/1 row."""
    row = tuple(Fraction(x) for x in row)
    if any(x != 0 and x != 1 for x in row):
        raise ValueError("complement_row requires a 0/1 row")
    return tuple(ONE - x for x in row)


# ---------------------------------------------------------------------------
# Isomorphism up to row and column permutation.
#
# Backtracking over row assignments, pruned by iterated refinement of
# row/column classes (value-multiset signatures).  Worst case exponential;
# used for verification at desk scale only.
# ---------------------------------------------------------------------------


def _refine_classes(M: Matrix):
    """Stable row and column class labels under alternating refinement."""
    rlab = [0] * M.m
    clab = [0] * M.n
    while True:
        rsig = [
            (rlab[i], tuple(sorted((clab[j], M.rows[i][j]) for j in range(M.n))))
            for i in range(M.m)
        ]
        rmap = {s: k for k, s in enumerate(sorted(set(rsig)))}
        new_rlab = [rmap[s] for s in rsig]
        csig = [
            (clab[j], tuple(sorted((new_rlab[i], M.rows[i][j]) for i in range(M.m))))
            for j in range(M.n)
        ]
        cmap = {s: k for k, s in enumerate(sorted(set(csig)))}
        new_clab = [cmap[s] for s in csig]
        if new_rlab == rlab and new_clab == clab:
            return rlab, clab
        rlab, clab = new_rlab, new_clab


def is_isomorphic(A: Matrix, B: Matrix) -> Optional[tuple]:
    """Search for (row_perm, col_perm) with permute(A, row_perm, col_perm) == B.

    Returns None when no such pair exists.  The witness is the
    lexicographically least one found by the deterministic search order.
    """
    if A.m != B.m or A.n != B.n:
        return None
    ra, ca = _refine_classes(A)
    rb, cb = _refine_classes(B)
    if sorted(ra) != sorted(rb) or sorted(ca) != sorted(cb):
        return None

    m, n = A.m, A.n
    # Column groups: pairs (A-cols, B-cols) with equal pattern under the rows
    # assigned so far.  Seeded by the refinement classes.
    groups = {}
    for j in range(n):
        groups.setdefault(ca[j], ([], []))[0].append(j)
    for j in range(n):
        if cb[j] not in groups:
            return None
        groups[cb[j]][1].append(j)
    init_groups = []
    for key in sorted(groups):
        acols, bcols = groups[key]
        if len(acols) != len(bcols):
            return None
        init_groups.append((acols, bcols))

    cand = [[a for a in range(m) if ra[a] == rb[i]] for i in range(m)]
    if any(not c for c in cand):
        return None

    row_perm = [-1] * m
    used = [False] * m

    def split(groups_in, i, a):
        out = []
        for acols, bcols in groups_in:
            if len(acols) == 1:
                if A.rows[a][acols[0]] != B.rows[i][bcols[0]]:
                    return None
                out.append((acols, bcols))
                continue
            asub, bsub = {}, {}
            for c in acols:
                asub.setdefault(A.rows[a][c], []).append(c)
            for c in bcols:
                bsub.setdefault(B.rows[i][c], []).append(c)
            if len(asub) != len(bsub):
                return None
            for v, ac in asub.items():
                bc = bsub.get(v)
                if bc is None or len(bc) != len(ac):
                    return None
                out.append((ac, bc))
        return out

    def dfs(i, groups_in):
        if i == m:
            col_perm = [0] * n
            for acols, bcols in groups_in:
                for a, b in zip(sorted(acols), sorted(bcols)):
                    col_perm[b] = a
            return col_perm
        for a in cand[i]:
            if used[a]:
                continue
            nxt = split(groups_in, i, a)
            if nxt is None:
                continue
            used[a] = True
            row_perm[i] = a
            res = dfs(i + 1, nxt)
            if res is not None:
                return res
            used[a] = False
            row_perm[i] = -1
        return None

    col_perm = dfs(0, init_groups)
    if col_perm is None:
        return None
    witness = (tuple(row_perm), tuple(col_perm))
    assert permute(A, *witness) == B
    return witness


# ---------------------------------------------------------------------------
# Reproducible shuffling.  splitmix64 keyed by a 64-bit seed drives a
# Fisher-Yates shuffle (rows first, then columns); documented so that seeded
# examples are reproducible bit for bit.
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator; deterministic across platforms."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # rejection sampling: unbiased
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % bound)
        while True:
            v = self.next()
            if v < limit:
                return v % bound


def _fisher_yates(k: int, rng: SplitMix64) -> tuple:
    perm = list(range(k))
    for i in range(k - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return tuple(perm)


def seeded_shuffle(S: Matrix, seed: int):
    """Deterministic row+column shuffle of S from a 64-bit seed.

    Returns (shuffled, row_perm, col_perm) with
    shuffled == permute(S, row_perm, col_perm).
    """
    rng = SplitMix64(seed)
    row_perm = _fisher_yates(S.m, rng)
    col_perm = _fisher_yates(S.n, rng)
    return permute(S, row_perm, col_perm), row_perm, col_perm
