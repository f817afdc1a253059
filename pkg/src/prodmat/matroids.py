"""Matroid algebra, hypersimplex slack matrices, and recognition of slack
matrices of 2-level matroid base polytopes.

Matroids whose base polytope is 2-level are exactly the ones obtained from
uniform matroids by 1-sums and 2-sums.  Their non-redundant slack matrices
compose: a 1-sum turns into a column-Cartesian 1-product, a 2-sum glues the
factor slacks along a coherent pair of special rows (an "x_p >= 0" row on
one side, a "y_p <= 1" row on the other) followed by duplicate removal.

The recognizer inverts that construction: hypersimplex leaves are matched
directly, 1-products are split with the information-based factorizer, and
2-products are enumerated with backtracking.  Every recovered expression is
re-expanded and checked against the input, so any returned answer is
correct by construction; the dual ambiguity (each factor can be read as
U(d,k) or U(d,d-k)) is resolved by trying both orientations where a glue row
is needed.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence, Union

from .matrix import Matrix, ONE, ZERO
from .polytopes import normalize_nonredundant_with_maps
from .products import factorize_irreducible, iter_two_product_certs_exact, one_product, two_product


#: diagnostic counters for the recognizer (certificates tried and abandoned);
#: useful for measuring how often greedy 2-product decomposition would fail
DECOMPOSITION_STATS = {"certs_tried": 0, "cert_backtracks": 0}


class CoherenceError(ValueError):
    """A 2-sum needs a coherent row that the factor slack does not contain."""


class MatroidInputError(ValueError):
    """Input violates the recognizer preconditions (not merely unrecognized)."""


# ---------------------------------------------------------------------------
# Matroids as explicit base families (desk-scale verification oracle).
# ---------------------------------------------------------------------------


class Matroid:
    """Ground set plus base family; bases are frozensets of element labels."""

    def __init__(self, ground: Sequence, bases: Iterable[frozenset]):
        self.ground = tuple(ground)
        self.bases = frozenset(frozenset(b) for b in bases)
        if not self.bases:
            raise ValueError("base family must be nonempty")
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise ValueError("bases must have equal cardinality")
        self.rank = sizes.pop()
        gset = set(self.ground)
        if any(not b <= gset for b in self.bases):
            raise ValueError("base uses an element outside the ground set")

    def is_loop(self, e) -> bool:
        return all(e not in b for b in self.bases)

    def is_coloop(self, e) -> bool:
        return all(e in b for b in self.bases)

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and set(self.ground) == set(other.ground)
            and self.bases == other.bases
        )

    def __repr__(self):
        return f"Matroid(|E|={len(self.ground)}, rank={self.rank}, |B|={len(self.bases)})"


def uniform_bases(d: int, k: int) -> Matroid:
    """U_{d,k}: every k-subset of a d-element ground set is a base."""
    if not 0 <= k <= d:
        raise ValueError(f"rank {k} out of range for {d} elements")
    return Matroid(range(d), (frozenset(c) for c in itertools.combinations(range(d), k)))


def dual(M: Matroid) -> Matroid:
    """Complement every base; an involution."""
    g = frozenset(M.ground)
    return Matroid(M.ground, (g - b for b in M.bases))


def one_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Direct sum: disjoint grounds, bases are all unions."""
    if set(M1.ground) & set(M2.ground):
        raise ValueError("ground sets must be disjoint")
    return Matroid(
        M1.ground + M2.ground, (b1 | b2 for b1 in M1.bases for b2 in M2.bases)
    )


def two_sum(M1: Matroid, M2: Matroid, p) -> Matroid:
    """Glue along the shared element p: bases (B1 | B2) - p with p in exactly one."""
    if set(M1.ground) & set(M2.ground) != {p}:
        raise ValueError("ground sets must intersect exactly in the glue element")
    for M in (M1, M2):
        if M.is_loop(p) or M.is_coloop(p):
            raise ValueError("glue element must be neither a loop nor a coloop")
    bases = set()
    for b1 in M1.bases:
        for b2 in M2.bases:
            if (p in b1) != (p in b2):
                bases.add((b1 | b2) - {p})
    ground = tuple(e for e in M1.ground if e != p) + tuple(e for e in M2.ground if e != p)
    return Matroid(ground, bases)


# ---------------------------------------------------------------------------
# Expression trees over uniform leaves.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    d: int
    k: int

    def __post_init__(self):
        if self.d < 2 or not 1 <= self.k <= self.d - 1:
            raise ValueError(f"leaf U({self.d},{self.k}) has a loop or coloop")


@dataclass(frozen=True)
class OneSum:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("1-sum needs at least two parts")


@dataclass(frozen=True)
class TwoSum:
    left: "Expr"
    right: "Expr"
    glue_left: int
    glue_right: int


Expr = Union[Leaf, OneSum, TwoSum]


def expr_size(e: Expr) -> int:
    if isinstance(e, Leaf):
        return e.d
    if isinstance(e, OneSum):
        return sum(expr_size(p) for p in e.parts)
    return expr_size(e.left) + expr_size(e.right) - 2


def expr_leaf_count(e: Expr) -> int:
    if isinstance(e, Leaf):
        return 1
    if isinstance(e, OneSum):
        return sum(expr_leaf_count(p) for p in e.parts)
    return expr_leaf_count(e.left) + expr_leaf_count(e.right)


def dual_expr(e: Expr) -> Expr:
    """Flip every leaf to its dual; glue labels are unchanged."""
    if isinstance(e, Leaf):
        return Leaf(e.d, e.d - e.k)
    if isinstance(e, OneSum):
        return OneSum(tuple(dual_expr(p) for p in e.parts))
    return TwoSum(dual_expr(e.left), dual_expr(e.right), e.glue_left, e.glue_right)


def _two_sum_maps(e: TwoSum):
    """Relabeling of surviving child elements into the parent ground 0..size-1."""
    sl = expr_size(e.left)
    sr = expr_size(e.right)
    if not 0 <= e.glue_left < sl or not 0 <= e.glue_right < sr:
        raise ValueError("glue element out of range")
    keep_l = [x for x in range(sl) if x != e.glue_left]
    keep_r = [x for x in range(sr) if x != e.glue_right]
    map_l = {x: i for i, x in enumerate(keep_l)}
    map_r = {x: i + len(keep_l) for i, x in enumerate(keep_r)}
    return map_l, map_r


def expr_to_bases(e: Expr) -> Matroid:
    """Evaluate the expression to an explicit matroid on ground 0..size-1."""
    if isinstance(e, Leaf):
        return uniform_bases(e.d, e.k)
    if isinstance(e, OneSum):
        bases = [frozenset()]
        offset = 0
        for part in e.parts:
            sub = expr_to_bases(part)
            bases = [b | frozenset(x + offset for x in pb) for b in bases for pb in sub.bases]
            offset += expr_size(part)
        return Matroid(range(offset), bases)
    ml, mr = _two_sum_maps(e)
    L = expr_to_bases(e.left)
    R = expr_to_bases(e.right)
    bases = set()
    for b1 in L.bases:
        for b2 in R.bases:
            if (e.glue_left in b1) != (e.glue_right in b2):
                bases.add(
                    frozenset(ml[x] for x in b1 if x != e.glue_left)
                    | frozenset(mr[y] for y in b2 if y != e.glue_right)
                )
    return Matroid(range(expr_size(e)), bases)


# ---------------------------------------------------------------------------
# Hypersimplex slack matrices S_{d,k}.
# ---------------------------------------------------------------------------


def hypersimplex_slack_with_bases(d: int, k: int):
    """Slack matrix of the base polytope of U_{d,k} plus the column -> base map.

    For 2 <= k <= d-2 the matrix is 2d x C(d,k) with columns (v, 1-v) over
    all weight-k indicator vectors v in ascending lexicographic order; rows
    0..d-1 are the "x_e >= 0" rows, rows d..2d-1 the "x_e <= 1" rows.  For
    k in {1, d-1} every column is a vertex of a simplex and the non-redundant
    slack matrix is the d x d identity.
    """
    if d < 2 or not 1 <= k <= d - 1:
        raise ValueError(f"no hypersimplex slack for d={d}, k={k}")
    if k == 1 or k == d - 1:
        rows = tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d))
        if k == 1:
            bases = [frozenset({j}) for j in range(d)]
        else:
            bases = [frozenset(range(d)) - {j} for j in range(d)]
        return Matrix(rows), bases
    vectors = sorted(
        tuple(ONE if i in c else ZERO for i in range(d))
        for c in itertools.combinations(range(d), k)
    )
    rows = [tuple(v[e] for v in vectors) for e in range(d)]
    rows += [tuple(ONE - v[e] for v in vectors) for e in range(d)]
    bases = [frozenset(i for i in range(d) if v[i] == ONE) for v in vectors]
    return Matrix(rows), bases


def hypersimplex_slack(d: int, k: int) -> Matrix:
    return hypersimplex_slack_with_bases(d, k)[0]


@dataclass(frozen=True)
class HypersimplexForm:
    """Recognition witness: size, rank, and per-element (v-row, complement-row).

    For the identity case the complement rows are absent (None).
    """

    d: int
    k: int
    elem_rows: tuple  # per element: (vrow, crow) with crow None in the identity case


def hypersimplex_col_bases(S: Matrix, form: HypersimplexForm) -> list:
    return [
        frozenset(e for e in range(form.d) if S.rows[form.elem_rows[e][0]][j] == ONE)
        for j in range(S.n)
    ]


def _side_labeling(S: Matrix, pairs: list, d: int, k: int):
    """Choose a v-side row per complement pair so the chosen-side columns are
    exactly all weight-k indicators.  DFS in pair order with multiset pruning:
    after t pairs every partial pattern pi must occur exactly
    C(d-t, k-weight(pi)) times."""
    n = S.n

    def counts(keyed):
        got = {}
        for key, w in keyed:
            got[key] = (got.get(key, (0, w))[0] + 1, w)
        return got

    def ok(keyed, t):
        rem = d - t
        for cnt, w in counts(keyed).values():
            if w > k or k - w > rem or cnt != comb(rem, k - w):
                return False
        return True

    def rec(t, keyed):
        if t == d:
            return []
        for side in (0, 1):
            row = S.rows[pairs[t][side]]
            nxt = [(key * 2 + int(row[j] == ONE), w + int(row[j] == ONE)) for j, (key, w) in enumerate(keyed)]
            if ok(nxt, t + 1):
                rest = rec(t + 1, nxt)
                if rest is not None:
                    return [side] + rest
        return None

    return rec(0, [(0, 0)] * n)


def recognize_hypersimplex(S: Matrix) -> Optional[HypersimplexForm]:
    """Match S against some S_{d,k} up to row/column permutation.

    Returns the canonical reading with k <= d-k (the U(d,d-k) reading is the
    same matrix with the sides flipped).  Every candidate labeling is
    verified: the chosen-side column multiset must be all C(d,k) weight-k
    indicators, pairwise distinct.
    """
    if not S.is_zero_one():
        return None
    m, n = S.m, S.n
    # identity: square permutation matrix of size >= 2
    if m == n and m >= 2:
        colof = {}
        ok = True
        for i, row in enumerate(S.rows):
            ones = [j for j, x in enumerate(row) if x == ONE]
            if len(ones) != 1 or ones[0] in colof:
                ok = False
                break
            colof[ones[0]] = i
        if ok and len(colof) == m:
            elem = tuple((colof[e], None) for e in range(m))
            return HypersimplexForm(m, 1, elem)
    if m % 2 or m < 8:
        return None
    d = m // 2
    by_row = {}
    for i, row in enumerate(S.rows):
        if row in by_row:
            return None
        by_row[row] = i
    pairs = []
    used = set()
    for i in range(m):
        if i in used:
            continue
        comp_key = tuple(ONE - x for x in S.rows[i])
        j = by_row.get(comp_key)
        if j is None or j in used or j == i:
            return None
        pairs.append((i, j))
        used.update((i, j))
    ks = [k for k in range(2, d // 2 + 1) if comb(d, k) == n]
    for k in ks:
        sides = _side_labeling(S, pairs, d, k)
        if sides is None:
            continue
        elem = tuple(
            (pairs[e][sides[e]], pairs[e][1 - sides[e]]) for e in range(d)
        )
        vcols = {tuple(S.rows[elem[e][0]][j] for e in range(d)) for j in range(n)}
        if len(vcols) == n and all(sum(1 for x in c if x == ONE) == k for c in vcols):
            return HypersimplexForm(d, k, elem)
    return None


# ---------------------------------------------------------------------------
# Expression -> slack matrix (with column bases), the builder side.
# ---------------------------------------------------------------------------


def _find_row(S: Matrix, pattern: tuple) -> Optional[int]:
    for i, row in enumerate(S.rows):
        if row == pattern:
            return i
    return None


def _nonneg_pattern(bases: Sequence[frozenset], e: int) -> tuple:
    return tuple(ONE if e in b else ZERO for b in bases)


def _upper_pattern(bases: Sequence[frozenset], e: int) -> tuple:
    return tuple(ZERO if e in b else ONE for b in bases)


def _drop_dominated_rows(S: Matrix, kept_cols_hint=None):
    """Remove rows whose zero set is strictly contained in another row's.

    In a slack matrix such rows are exactly the valid-but-redundant
    inequalities; gluing can produce them (the complement of a special row
    need not be facet-defining, e.g. the upper-bound row of a simplex
    element).  Returns (matrix, kept row indices).
    """
    zeros = [frozenset(j for j in range(S.n) if row[j] == 0) for row in S.rows]
    keep = [
        i
        for i in range(S.m)
        if not any(i != h and zeros[i] < zeros[h] for h in range(S.m))
    ]
    if len(keep) == S.m:
        return S, keep
    return Matrix(tuple(S.rows[i] for i in keep)), keep


def expr_to_slack_with_bases(e: Expr):
    """Build the non-redundant slack matrix of B(expr) plus column -> base map.

    Leaves map to hypersimplex slacks, 1-sums to 1-products, 2-sums to
    2-products glued along a coherent pair: the left factor's "x_p >= 0" row
    and the right factor's "y_p <= 1" row, both located by their pattern over
    the factor's columns.  Raises CoherenceError when a needed row does not
    exist (e.g. a d >= 3 simplex leaf used on the "<= 1" side).
    """
    if isinstance(e, Leaf):
        return hypersimplex_slack_with_bases(e.d, e.k)
    if isinstance(e, OneSum):
        acc, bases = expr_to_slack_with_bases(e.parts[0])
        offset = expr_size(e.parts[0])
        for part in e.parts[1:]:
            Sp, pb = expr_to_slack_with_bases(part)
            pb = [frozenset(x + offset for x in b) for b in pb]
            acc2 = one_product(acc, Sp)
            bases = [bases[j // Sp.n] | pb[j % Sp.n] for j in range(acc2.n)]
            acc = acc2
            offset += expr_size(part)
        return acc, bases
    SL, bl = expr_to_slack_with_bases(e.left)
    SR, br = expr_to_slack_with_bases(e.right)
    xrow = _find_row(SL, _nonneg_pattern(bl, e.glue_left))
    yrow = _find_row(SR, _upper_pattern(br, e.glue_right))
    if xrow is None or yrow is None:
        # reversed coherent pair (x <= 1 with y >= 0) glues the same matroid;
        # needed e.g. when a simplex leaf only carries rows of one kind
        xrow = _find_row(SL, _upper_pattern(bl, e.glue_left))
        yrow = _find_row(SR, _nonneg_pattern(br, e.glue_right))
        if xrow is None or yrow is None:
            raise CoherenceError(
                f"no coherent row pair for glue elements "
                f"{e.glue_left}/{e.glue_right} (identity leaf without the needed side)"
            )
    P = two_product(SL, xrow, SR, yrow)
    ml, mr = _two_sum_maps(e)
    J0a = [c for c in range(SL.n) if SL.rows[xrow][c] == ZERO]
    J1a = [c for c in range(SL.n) if SL.rows[xrow][c] == ONE]
    J0b = [c for c in range(SR.n) if SR.rows[yrow][c] == ZERO]
    J1b = [c for c in range(SR.n) if SR.rows[yrow][c] == ONE]
    pbases = []
    for t in range(len(J0a) * len(J0b)):
        cl, cr = J0a[t // len(J0b)], J0b[t % len(J0b)]
        pbases.append((cl, cr))
    for t in range(len(J1a) * len(J1b)):
        cl, cr = J1a[t // len(J1b)], J1b[t % len(J1b)]
        pbases.append((cl, cr))
    combined = []
    for cl, cr in pbases:
        combined.append(
            frozenset(ml[x] for x in bl[cl] if x != e.glue_left)
            | frozenset(mr[y] for y in br[cr] if y != e.glue_right)
        )
    out, _, kept_cols = normalize_nonredundant_with_maps(P)
    content_to_base = {}
    for j in range(P.n):
        key = P.col(j)
        prev = content_to_base.get(key)
        if prev is not None and prev != combined[j]:
            raise CoherenceError("duplicate columns with distinct bases")
        content_to_base[key] = combined[j]
    out, _ = _drop_dominated_rows(out)
    return out, [combined[j] for j in kept_cols]


def expr_to_slack(e: Expr) -> Matrix:
    return expr_to_slack_with_bases(e)[0]


# ---------------------------------------------------------------------------
# Expression text format.
#   (u d k)                uniform leaf
#   (1sum e1 e2 ...)       1-sum, n-ary
#   (2sum e1 e2)           2-sum, glues auto-assigned deterministically
#                          (last element of e1, first element of e2)
#   (2sum [gl gr] e1 e2)   2-sum with explicit glue elements
# ---------------------------------------------------------------------------


def expr_to_text(e: Expr) -> str:
    if isinstance(e, Leaf):
        return f"(u {e.d} {e.k})"
    if isinstance(e, OneSum):
        return "(1sum " + " ".join(expr_to_text(p) for p in e.parts) + ")"
    auto = e.glue_left == expr_size(e.left) - 1 and e.glue_right == 0
    inner = f"{expr_to_text(e.left)} {expr_to_text(e.right)}"
    if auto:
        return f"(2sum {inner})"
    return f"(2sum [{e.glue_left} {e.glue_right}] {inner})"


def parse_expr(text: str) -> Expr:
    tokens = re.findall(r"[()\[\]]|[^\s()\[\]]+", text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, found {tok!r}")
        return tok

    def parse_node() -> Expr:
        take("(")
        head = take()
        if head == "u":
            d = int(take())
            k = int(take())
            take(")")
            return Leaf(d, k)
        if head == "1sum":
            parts = []
            while peek() != ")":
                parts.append(parse_node())
            take(")")
            return OneSum(tuple(parts))
        if head == "2sum":
            gl = gr = None
            if peek() == "[":
                take("[")
                gl = int(take())
                gr = int(take())
                take("]")
            left = parse_node()
            right = parse_node()
            take(")")
            if gl is None:
                gl, gr = expr_size(left) - 1, 0
            return TwoSum(left, right, gl, gr)
        raise ValueError(f"unknown node type {head!r}")

    node = parse_node()
    if pos != len(tokens):
        raise ValueError("trailing tokens after expression")
    return node


# ---------------------------------------------------------------------------
# Recognition of slack matrices of 2-level matroid base polytopes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatroidRecognition:
    """Recovered expression plus the column -> base correspondence."""

    expr: Expr
    col_bases: tuple  # per input column, a frozenset over ground 0..size-1
    size: int

    def matroid(self) -> Matroid:
        return expr_to_bases(self.expr)

    def row_provenance(self, S: Matrix) -> list:
        """Classify each input row as an element row or a derived (cut) row."""
        out = []
        for row in S.rows:
            tag = ("other", None)
            for e in range(self.size):
                if row == _nonneg_pattern(self.col_bases, e):
                    tag = ("nonneg", e)
                    break
                if row == _upper_pattern(self.col_bases, e):
                    tag = ("upper", e)
                    break
            out.append(tag)
        return out


def _screen(S: Matrix) -> Optional[str]:
    if not S.is_zero_one():
        return "entries must be 0/1"
    for i, row in enumerate(S.rows):
        if all(x == row[0] for x in row):
            return f"row {i} is constant"
    if len(set(S.rows)) != S.m:
        return "rows must be distinct"
    if len(set(S.col(j) for j in range(S.n))) != S.n:
        return "columns must be distinct"
    return None


def _verify_candidate(S: Matrix, expr: Expr, col_bases: list, strict: bool) -> bool:
    """Re-expand the expression and compare with S through the base matching.

    Strict mode demands exactly the non-redundant slack matrix; otherwise S
    may carry extra rows as long as each one is an element row (x_e >= 0 or
    x_e <= 1), which is how complement-row augmentation shows up in
    sub-problems.
    """
    try:
        R, rbases = expr_to_slack_with_bases(expr)
    except (CoherenceError, ValueError):
        return False
    n = S.n
    if R.n != n or len(set(col_bases)) != n:
        return False
    pos = {b: c for c, b in enumerate(rbases)}
    if set(col_bases) != set(pos):
        return False
    inv = [0] * n
    for j, b in enumerate(col_bases):
        inv[pos[b]] = j
    rows_s = {tuple(row[inv[c]] for c in range(n)) for row in S.rows}
    rows_r = set(R.rows)
    if not rows_r <= rows_s:
        return False
    extras = rows_s - rows_r
    if strict:
        return not extras
    if not extras:
        return True
    allowed = set()
    for e in range(expr_size(expr)):
        allowed.add(_nonneg_pattern(rbases, e))
        allowed.add(_upper_pattern(rbases, e))
    return extras <= allowed


def _identity_with_extras(S: Matrix):
    """Match "identity plus redundant x_e <= 1 rows", the one leaf shape that
    complement augmentation can produce (the d x d core plus weight d-1 rows)."""
    d = S.n
    if S.m <= d:
        return None
    unit = {}
    for row in S.rows:
        w = sum(1 for x in row if x == ONE)
        if w == 1:
            c = row.index(ONE)
            if c in unit:
                return None
            unit[c] = row
        elif w != d - 1:
            return None
    if len(unit) != d:
        return None
    return Leaf(d, 1), [frozenset({j}) for j in range(d)]


def _glue_options(expr: Expr, bases: list, pattern: tuple, side: str):
    """Ways to read `pattern` as a coherent glue row of the child, in order.

    Yields (expr', bases', element): either the child as returned or its
    dual, whichever makes the pattern an "x_e >= 0" row (side "nonneg") or an
    "x_e <= 1" row (side "upper")."""
    size = expr_size(expr)
    full = frozenset(range(size))
    out = []
    for e in range(size):
        direct = _nonneg_pattern(bases, e)
        compl = _upper_pattern(bases, e)
        want_asis, want_dual = (direct, compl) if side == "nonneg" else (compl, direct)
        if pattern == want_asis:
            out.append((expr, bases, e))
        if pattern == want_dual:
            out.append((dual_expr(expr), [full - b for b in bases], e))
    return out


def _factor_column_map(S: Matrix, block: tuple, factor: Matrix):
    """Map each column of S to the factor column holding its restricted pattern."""
    pat_to_col = {}
    for c in range(factor.n):
        key = tuple(factor.rows[r][c] for r in range(factor.m))
        if key in pat_to_col:
            return None
        pat_to_col[key] = c
    out = []
    for j in range(S.n):
        key = tuple(S.rows[i][j] for i in block)
        c = pat_to_col.get(key)
        if c is None:
            return None
        out.append(c)
    return out


def _recognize_rec(S: Matrix, strict: bool):
    if _screen(S) is not None:
        return None

    form = recognize_hypersimplex(S)
    if form is not None:
        cand = (Leaf(form.d, form.k), hypersimplex_col_bases(S, form))
        if _verify_candidate(S, cand[0], cand[1], strict):
            return cand
        return None

    if not strict:
        cand = _identity_with_extras(S)
        if cand is not None and _verify_candidate(S, cand[0], cand[1], strict):
            return cand

    fact = factorize_irreducible(S)
    if fact.t >= 2:
        kids = []
        for block, factor in zip(fact.blocks, fact.factors):
            sub = _recognize_rec(factor, strict)
            if sub is None:
                return None
            cmap = _factor_column_map(S, block, factor)
            if cmap is None:
                return None
            kids.append((sub[0], sub[1], cmap))
        expr = OneSum(tuple(k[0] for k in kids))
        col_bases = []
        for j in range(S.n):
            b = frozenset()
            offset = 0
            for kexpr, kbases, cmap in kids:
                b |= frozenset(x + offset for x in kbases[cmap[j]])
                offset += expr_size(kexpr)
            col_bases.append(b)
        if _verify_candidate(S, expr, col_bases, strict):
            return expr, col_bases
        return None

    for cert in iter_two_product_certs_exact(S):
        # 2-sums with a two-column factor are relabelings; skipping them keeps
        # the recursion strictly shrinking without losing any recognizable input
        if cert.sides1 == cert.block_sizes or cert.sides2 == cert.block_sizes:
            continue
        DECOMPOSITION_STATS["certs_tried"] += 1
        left = _recognize_rec(cert.S1p, False)
        if left is None:
            DECOMPOSITION_STATS["cert_backtracks"] += 1
            continue
        right = _recognize_rec(cert.S2p, False)
        if right is None:
            DECOMPOSITION_STATS["cert_backtracks"] += 1
            continue
        x_pattern = cert.S1p.rows[cert.x1_pos]
        y_pattern = cert.S2p.rows[cert.y1_pos]
        for exprL, basesL, gl in _glue_options(left[0], left[1], x_pattern, "nonneg"):
            for exprR, basesR, gr in _glue_options(right[0], right[1], y_pattern, "upper"):
                expr = TwoSum(exprL, exprR, gl, gr)
                ml, mr = _two_sum_maps(expr)
                col_bases = []
                consistent = True
                for j in range(S.n):
                    b1 = basesL[cert.colmap1[j]]
                    b2 = basesR[cert.colmap2[j]]
                    if (gl in b1) == (gr in b2):
                        consistent = False
                        break
                    col_bases.append(
                        frozenset(ml[x] for x in b1 if x != gl)
                        | frozenset(mr[y] for y in b2 if y != gr)
                    )
                if consistent and _verify_candidate(S, expr, col_bases, strict):
                    return expr, col_bases
        DECOMPOSITION_STATS["cert_backtracks"] += 1
    return None


def recognize_2level_matroid_slack(S: Matrix) -> Optional[MatroidRecognition]:
    """Decide whether S is the non-redundant slack matrix of a 2-level matroid
    base polytope; if so return the expression over uniform leaves.

    Precondition violations (non-0/1 entries, constant rows, duplicate rows
    or columns) raise MatroidInputError; an unrecognized but well-formed
    input returns None.
    """
    reason = _screen(S)
    if reason is not None:
        raise MatroidInputError(reason)
    res = _recognize_rec(S, strict=True)
    if res is None:
        return None
    expr, col_bases = res
    return MatroidRecognition(expr, tuple(col_bases), expr_size(expr))
