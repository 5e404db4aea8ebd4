"""Exact linear algebra over Q(v) and Q

Matrices are plain lists of rows. Entries over `Q(v)` are
`LaurentPoly` values (or integers); elimination is fraction-free in
the sense of Bareiss: every division performed is exact in
`Z[v, v^-1]`, so entries never leave the Laurent ring and only grow
like minors of the input.

Solutions over `Q(v)` are returned as a pair `(numerators, denominator)`
of Laurent polynomials with `x[i] = numerators[i] / denominator`.

The `*_q` variants do Gauss-Jordan elimination over the rationals with
`fractions.Fraction` and are used for specialized matrices and for the
coefficient systems of `klperiodic.periodic.solve_in_generators`.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .laurent import LaurentPoly


Matrix = List[List[LaurentPoly]]


def _coerce(matrix) -> Matrix:
    return [[LaurentPoly.coerce(x) for x in row] for row in matrix]


def _pick_pivot(rows: Matrix, start: int, col: int) -> Optional[int]:
    # smallest degree span keeps the minors small
    best, best_span = None, None
    for r in range(start, len(rows)):
        entry = rows[r][col]
        if entry.is_zero():
            continue
        if best is None or entry.span < best_span:
            best, best_span = r, entry.span
    return best


def bareiss(matrix, ncols: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    """Fraction-free row echelon form

    Eliminates in the first `ncols` columns (all columns by default);
    any further columns, e.g. an augmented right-hand side, are carried
    along. Returns the echelon rows and the list of pivot columns. The
    pivot of step `k` equals, up to sign, the `(k+1)`-minor on the
    chosen pivot rows and columns.
    """
    rows = _coerce(matrix)
    if not rows:
        return rows, []
    width = len(rows[0])
    ncols = width if ncols is None else ncols

    pivots = []
    prev = LaurentPoly.const(1)
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = _pick_pivot(rows, r, c)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, len(rows)):
            lead = rows[i][c]
            for j in range(c + 1, width):
                num = piv * rows[i][j] - lead * rows[r][j]
                rows[i][j] = num.divide_exact(prev) if num else num
            rows[i][c] = LaurentPoly()
        pivots.append(c)
        prev = piv
        r += 1
    return rows, pivots


def rank(matrix) -> int:
    """Rank over Q(v)"""
    if not matrix:
        return 0
    _, pivots = bareiss(matrix)
    return len(pivots)


def _back_substitute(rows: Matrix, pivots: List[int], rhs_col: Optional[int],
                     free: Dict[int, LaurentPoly], ncols: int):
    """Solve the echelon system scaled by its last pivot

    Returns `y` with `x = y / det`, where `det` is the last pivot. All
    divisions are exact by Cramer's rule.
    """
    det = rows[len(pivots) - 1][pivots[-1]] if pivots else LaurentPoly.const(1)
    y = [LaurentPoly() for _ in range(ncols)]
    for c, value in free.items():
        y[c] = value * det
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        acc = det * rows[k][rhs_col] if rhs_col is not None else LaurentPoly()
        for j in range(c + 1, ncols):
            if y[j]:
                acc = acc - rows[k][j] * y[j]
        y[c] = acc.divide_exact(rows[k][c]) if acc else acc
    return y, det


def solve(matrix, rhs: Sequence) -> Optional[Tuple[List[LaurentPoly], LaurentPoly]]:
    """Solve `matrix * x = rhs` over Q(v)

    Free variables are set to zero. Returns `(numerators, denominator)`
    or `None` if the system is inconsistent.
    """
    if not matrix:
        return None if any(LaurentPoly.coerce(b) for b in rhs) else ([], LaurentPoly.const(1))
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = bareiss(augmented, ncols)
    for k in range(len(pivots), len(rows)):
        if not rows[k][ncols].is_zero():
            return None
    return _back_substitute(rows, pivots, ncols, {}, ncols)


def nullspace(matrix) -> List[List[LaurentPoly]]:
    """Basis of the right kernel over Q(v), with Laurent entries"""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = bareiss(matrix)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        # a free column only constrains the pivot columns before it
        piv = [c for c in pivots if c < f]
        y, _ = _back_substitute(rows[:len(piv)], piv, None, {f: LaurentPoly.const(1)}, ncols)
        basis.append(y)
    return basis


def specialize_matrix(matrix, value) -> List[List[Fraction]]:
    return [[LaurentPoly.coerce(x).specialize(value) for x in row] for row in matrix]


def _echelon_q(rows: List[List[Fraction]], ncols: int):
    rows = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_q(matrix) -> int:
    if not matrix:
        return 0
    _, pivots = _echelon_q(matrix, len(matrix[0]))
    return len(pivots)


def solve_q(matrix, rhs) -> Optional[List[Fraction]]:
    """Solve over Q with free variables set to zero, `None` if inconsistent"""
    if not matrix:
        return None if any(rhs) else []
    ncols = len(matrix[0])
    rows, pivots = _echelon_q([list(row) + [b] for row, b in zip(matrix, rhs)], ncols)
    for k in range(len(pivots), len(rows)):
        if rows[k][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for k, c in enumerate(pivots):
        x[c] = rows[k][ncols]
    return x


def certified_rank(matrix, value=2) -> int:
    """Rank over Q(v), short-circuited by specialization

    Rank can only drop under specialization, so a full-rank
    specialization at `value` already settles the rank over Q(v).
    """
    if not matrix:
        return 0
    full = min(len(matrix), len(matrix[0]))
    if rank_q(specialize_matrix(matrix, value)) == full:
        return full
    return rank(matrix)


class SparseEliminator:
    """Incremental elimination of sparse rational equations

    Equations are dictionaries `{column: coefficient}` plus a constant.
    Each added equation is reduced against the pivots collected so far;
    an equation reducing to `0 = c` with `c != 0` marks the system
    inconsistent and is kept as a witness.
    """

    def __init__(self):
        self.pivots = {}
        self.inconsistent = None

    def add(self, row: Dict[int, Fraction], constant: Fraction = Fraction(0), tag=None) -> bool:
        row = {c: Fraction(x) for c, x in row.items() if x}
        constant = Fraction(constant)
        while row:
            c = min(row)
            if c not in self.pivots:
                inv = 1 / row[c]
                self.pivots[c] = ({k: x * inv for k, x in row.items()}, constant * inv)
                return True
            prow, pconst = self.pivots[c]
            f = row[c]
            for k, x in prow.items():
                n = row.get(k, 0) - f * x
                if n:
                    row[k] = n
                else:
                    row.pop(k, None)
            constant -= f * pconst
        if constant != 0 and self.inconsistent is None:
            self.inconsistent = (tag, constant)
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solution(self) -> Optional[Dict[int, Fraction]]:
        """Back-substituted solution with free columns set to zero"""
        if self.inconsistent is not None:
            return None
        x = {}
        for c in sorted(self.pivots, reverse=True):
            prow, pconst = self.pivots[c]
            value = pconst - sum(coeff * x.get(k, 0) for k, coeff in prow.items() if k != c)
            if value:
                x[c] = value
        return x
