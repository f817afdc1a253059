"""Slack matrices of explicit polytope descriptions and Cartesian decomposition.

The slack matrix of a polytope given by vertices v_1..v_n and valid
inequalities a_i . x <= b_i has entries b_i - a_i . v_j, all nonnegative.
A slack matrix is a 1-product exactly when the polytope is affinely
equivalent to a Cartesian product, and the irreducible blocks are slack
matrices of the Cartesian factors.  Whether an arbitrary nonnegative matrix
is a slack matrix of *some* polytope is not decided here (that verification
problem is open); callers assert it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .matrix import Matrix, MatrixFormatError, _parse_token
from .products import Factorization, factorize_irreducible


class SlackError(ValueError):
    """Inconsistent vertex/inequality descriptions (negative slack)."""


@dataclass(frozen=True)
class VRep:
    """Vertex description: n points in dimension d, exact coordinates."""

    d: int
    points: tuple  # tuple of coordinate tuples

    def __post_init__(self):
        if not self.points:
            raise ValueError("need at least one point")
        if any(len(p) != self.d for p in self.points):
            raise ValueError("point dimension mismatch")


@dataclass(frozen=True)
class HRep:
    """Inequality description: rows (a, b) meaning a . x <= b."""

    d: int
    ineqs: tuple  # tuple of (coefficient tuple, rhs)

    def __post_init__(self):
        if not self.ineqs:
            raise ValueError("need at least one inequality")
        if any(len(a) != self.d for a, _ in self.ineqs):
            raise ValueError("coefficient dimension mismatch")


def parse_vrep(text: str) -> VRep:
    """Vertex file: header "n d" then n rows of d coordinates."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty vertex file")
    n, d = (int(t) for t in lines[0].split())
    if len(lines) != n + 1:
        raise MatrixFormatError(f"expected {n} points")
    pts = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != d:
            raise MatrixFormatError(f"expected {d} coordinates in {ln!r}")
        pts.append(tuple(_parse_token(t) for t in toks))
    return VRep(d, tuple(pts))


def parse_hrep(text: str) -> HRep:
    """Inequality file: header "m d" then m rows "a_1 ... a_d b"."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty inequality file")
    m, d = (int(t) for t in lines[0].split())
    if len(lines) != m + 1:
        raise MatrixFormatError(f"expected {m} inequalities")
    ineqs = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != d + 1:
            raise MatrixFormatError(f"expected {d + 1} numbers in {ln!r}")
        nums = [_parse_token(t) for t in toks]
        ineqs.append((tuple(nums[:-1]), nums[-1]))
    return HRep(d, tuple(ineqs))


def slack_from_vh(V: VRep, H: HRep) -> Matrix:
    """Exact slack matrix S[i][j] = b_i - a_i . v_j; rejects negative slacks."""
    if V.d != H.d:
        raise ValueError(f"dimension mismatch: points in R^{V.d}, inequalities in R^{H.d}")
    rows = []
    for i, (a, b) in enumerate(H.ineqs):
        row = []
        for j, v in enumerate(V.points):
            s = b - sum(ai * vi for ai, vi in zip(a, v))
            if s < 0:
                raise SlackError(f"point {j} violates inequality {i} (slack {s})")
            row.append(s)
        rows.append(tuple(row))
    return Matrix(rows)


def cartesian_factorize(S: Matrix) -> Factorization:
    """Irreducible 1-product factorization of a slack matrix.

    The caller asserts S is a slack matrix; then each factor is the slack
    matrix of one Cartesian factor of the polytope (up to affine
    equivalence).
    """
    return factorize_irreducible(S)


def two_level_rows(S: Matrix) -> List[Tuple[int, tuple]]:
    """Rows taking exactly the values {0, s} for some s > 0, scaled by 1/s.

    Constant rows and rows without a zero are excluded.
    """
    out = []
    for i, row in enumerate(S.rows):
        vals = set(row)
        if len(vals) != 2 or Fraction(0) not in vals:
            continue
        s = max(vals)
        if s <= 0:
            continue
        out.append((i, tuple(x / s for x in row)))
    return out


def _normalize_once(S: Matrix, row_ids: list, col_ids: list):
    changed = False
    # rows: drop duplicates, all-zero rows and rows with no zero entry
    seen = set()
    keep_r = []
    for i in range(S.m):
        row = S.rows[i]
        if row in seen or all(x == 0 for x in row) or all(x != 0 for x in row):
            changed = True
            continue
        seen.add(row)
        keep_r.append(i)
    if not keep_r:
        raise ValueError("normalization removed every row")
    S = Matrix(tuple(S.rows[i] for i in keep_r))
    row_ids[:] = [row_ids[i] for i in keep_r]
    # columns: same rules
    seen = set()
    keep_c = []
    for j in range(S.n):
        col = S.col(j)
        if col in seen or all(x == 0 for x in col) or all(x != 0 for x in col):
            changed = True
            continue
        seen.add(col)
        keep_c.append(j)
    if not keep_c:
        raise ValueError("normalization removed every column")
    S = S.restrict_cols(keep_c)
    col_ids[:] = [col_ids[j] for j in keep_c]
    return S, changed


def normalize_nonredundant_with_maps(S: Matrix):
    """Iterate the non-redundancy cleanup to a fixpoint; track kept indices.

    Returns (matrix, kept_rows, kept_cols) where the lists hold the original
    indices of the surviving rows/columns.
    """
    row_ids = list(range(S.m))
    col_ids = list(range(S.n))
    while True:
        S, changed = _normalize_once(S, row_ids, col_ids)
        if not changed:
            return S, row_ids, col_ids


def normalize_nonredundant(S: Matrix) -> Matrix:
    """Remove duplicate rows/columns and rows/columns that are all-zero or zero-free.

    Idempotent; raises ValueError if nothing survives.
    """
    return normalize_nonredundant_with_maps(S)[0]
