"""Exact linear algebra over the rationals.

Everything in this package reduces to ranks, kernels and solves of matrices
with ``fractions.Fraction`` entries.  Matrices are dense, row-major lists of
lists.  Elimination is deterministic: rows are processed in the order given
and the pivot of a row is its first (leftmost) nonzero entry.  Reduced bases
are fully reduced (every pivot column is zero in all other rows); several
invariants elsewhere (e.g. independence of lowest-degree forms of an
echelonized basis) rely on full reduction, so partial echelon forms are never
exposed.

No floats, ever.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Sequence, Tuple

Rat = Fraction
Row = List[Rat]
QMatrix = List[Row]


def rat(x) -> Rat:
    """Coerce ints, strings like '3/4', or Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed; use Fraction or 'p/q' strings")
    return Fraction(x)


def mat(rows: Iterable[Iterable]) -> QMatrix:
    """Build a QMatrix, coercing entries with rat()."""
    out = [[rat(x) for x in row] for row in rows]
    if out:
        w = len(out[0])
        for r in out:
            if len(r) != w:
                raise ValueError("ragged rows")
    return out


def zeros(nrows: int, ncols: int) -> QMatrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> QMatrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(m: QMatrix) -> QMatrix:
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    if not a or not b:
        return []
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _first_nonzero(row: Sequence[Rat]) -> int:
    """Index of the leftmost nonzero entry, or -1 for a zero row."""
    for j, x in enumerate(row):
        if x:
            return j
    return -1


def rref(m: QMatrix) -> Tuple[QMatrix, List[int]]:
    """Reduced row echelon form.

    Returns (rows, pivot_columns).  Rows are fully reduced, pivots are 1,
    pivot columns strictly increase, zero rows are dropped.
    """
    rows: List[Row] = []
    pivots: List[int] = []
    for raw in m:
        row = list(raw)
        for p, r in zip(pivots, rows):
            if row[p]:
                c = row[p]
                for j in range(p, len(row)):
                    row[j] -= c * r[j]
        p = _first_nonzero(row)
        if p < 0:
            continue
        inv = row[p]
        row = [x / inv for x in row]
        # back-substitute into the rows already collected
        for r in rows:
            if r[p]:
                c = r[p]
                for j in range(len(row)):
                    r[j] -= c * row[j]
        # keep pivot columns sorted
        k = 0
        while k < len(pivots) and pivots[k] < p:
            k += 1
        rows.insert(k, row)
        pivots.insert(k, p)
    return rows, pivots


def rank(m: QMatrix) -> int:
    return len(rref(m)[0])


def kernel_basis(m: QMatrix) -> List[Row]:
    """Echelonized basis of the right kernel {v : m v = 0}.

    One basis vector per free column, in column order; the vector for free
    column j has a 1 in position j and zeros in all other free positions, so
    the result is itself in reduced echelon form.  Length is always
    ncols - rank(m).
    """
    if not m:
        return []
    ncols = len(m[0])
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    basis: List[Row] = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for r, p in zip(rows, pivots):
            v[p] = -r[j]
        basis.append(v)
    return basis


def solve_unique(m: QMatrix, rhs: Sequence[Rat]) -> Row:
    """Solve m x = rhs for square invertible m (raises if singular)."""
    n = len(m)
    if n == 0:
        return []
    if len(m[0]) != n:
        raise ValueError("solve_unique needs a square matrix")
    aug = [list(row) + [rat(b)] for row, b in zip(m, rhs)]
    rows, pivots = rref(aug)
    if len(rows) != n or pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [r[n] for r in rows]


class EchelonState:
    """Incremental reduced row echelon over dense rows.

    insert() reduces the candidate against the rows held so far, and either
    rejects it (dependent: returns False) or normalizes it, back-substitutes
    into the existing rows and stores it.  The held rows therefore always form
    an RREF basis of the span of all accepted rows, regardless of insertion
    order.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: List[Row] = []
        self.pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def insert(self, raw: Sequence[Rat]) -> bool:
        if len(raw) != self.ncols:
            raise ValueError("row width mismatch")
        row = [rat(x) for x in raw]
        for p, r in zip(self.pivots, self.rows):
            if row[p]:
                c = row[p]
                for j in range(p, self.ncols):
                    row[j] -= c * r[j]
        p = _first_nonzero(row)
        if p < 0:
            return False
        inv = row[p]
        row = [x / inv for x in row]
        for r in self.rows:
            if r[p]:
                c = r[p]
                for j in range(self.ncols):
                    r[j] -= c * row[j]
        k = 0
        while k < len(self.pivots) and self.pivots[k] < p:
            k += 1
        self.rows.insert(k, row)
        self.pivots.insert(k, p)
        return True


def row_reduce_incremental(state: EchelonState | None, row: Sequence[Rat],
                           ncols: int | None = None) -> Tuple[EchelonState, bool]:
    """Feed one row into an echelon state; pass state=None to start.

    Returns (state, accepted) where accepted is False iff the row was already
    in the span of the rows accepted so far.
    """
    if state is None:
        if ncols is None:
            ncols = len(row)
        state = EchelonState(ncols)
    accepted = state.insert(row)
    return state, accepted


SparseVec = Dict[Hashable, Rat]


class SparseEchelon:
    """Incremental RREF over sparse vectors keyed by arbitrary hashables.

    key_order maps a key to a sortable token; the pivot of a vector is its
    *smallest* key under that order.  Used for spaces of polynomials keyed by
    monomials, where the natural pivot is the least monomial.  Rows are kept
    fully reduced against each other.
    """

    def __init__(self, key_order: Callable[[Hashable], object]):
        self.key_order = key_order
        self.table: Dict[Hashable, SparseVec] = {}  # pivot key -> row

    @property
    def rank(self) -> int:
        return len(self.table)

    def reduce(self, vec: SparseVec) -> SparseVec:
        """Fully reduce a vector against the held rows (not inserted)."""
        v = {k: rat(c) for k, c in vec.items() if c}
        while True:
            hit = None
            for k in v:
                if k in self.table:
                    hit = k
                    break
            if hit is None:
                return v
            c = v[hit]
            for k2, c2 in self.table[hit].items():
                nv = v.get(k2, Fraction(0)) - c * c2
                if nv:
                    v[k2] = nv
                else:
                    v.pop(k2, None)

    def insert(self, vec: SparseVec) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v, key=self.key_order)
        inv = v[p]
        v = {k: c / inv for k, c in v.items()}
        for pk, row in self.table.items():
            if p in row:
                c = row[p]
                for k2, c2 in v.items():
                    nv = row.get(k2, Fraction(0)) - c * c2
                    if nv:
                        row[k2] = nv
                    else:
                        row.pop(k2, None)
        self.table[p] = v
        return True

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)

    def basis(self) -> List[SparseVec]:
        """Rows sorted by pivot key, smallest pivot first."""
        return [dict(self.table[p])
                for p in sorted(self.table, key=self.key_order)]
