"""Sparse order-3 tensors over Q and the standard constructions on them.

Conventions, fixed once:
  * indices are 0-based internally; the unit/neutral basis vector of a
    construction sits at index 0 and the distinguished "top" vector at the
    last index (so the three-sum tensor cw(n) has entries (0,i,i), (i,0,i)
    for i >= 1 and (i,i,n-1) for the middle range);
  * group elements are enumerated lexicographically with the neutral
    element first;
  * the algebra-from-tensor basis order is (unit, x_1..x_n, y_1..y_k,
    z_1..z_m).
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import guards
from .exact import QMatrix, Rat, rank, rat

Index3 = Tuple[int, int, int]


class Tensor3:
    """Sparse rational tensor of order 3.

    entries maps index triples to nonzero Fractions; labels, when present,
    name the basis vectors of each axis (purely cosmetic: equality ignores
    them).
    """

    __slots__ = ("dims", "entries", "labels")

    def __init__(self, dims: Sequence[int],
                 entries: Dict[Index3, object],
                 labels: Optional[Sequence[Sequence[str]]] = None):
        d = tuple(int(x) for x in dims)
        if len(d) != 3 or any(x < 1 for x in d):
            raise ValueError(f"bad dims {dims}")
        em: Dict[Index3, Rat] = {}
        for idx, c in entries.items():
            i, j, k = (int(x) for x in idx)
            if not (0 <= i < d[0] and 0 <= j < d[1] and 0 <= k < d[2]):
                raise ValueError(f"index {idx} out of range for dims {d}")
            c = rat(c)
            if c:
                em[(i, j, k)] = c
        lab = None
        if labels is not None:
            lab = tuple(tuple(str(s) for s in ax) for ax in labels)
            if any(len(ax) != dd for ax, dd in zip(lab, d)):
                raise ValueError("label table sizes do not match dims")
        self.dims = d
        self.entries = em
        self.labels = lab

    def nnz(self) -> int:
        return len(self.entries)

    def support(self) -> List[Index3]:
        return sorted(self.entries)

    def __eq__(self, other):
        return (isinstance(other, Tensor3) and self.dims == other.dims
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.dims, frozenset(self.entries.items())))

    def __repr__(self):
        return f"Tensor3(dims={self.dims}, nnz={self.nnz()})"

    def slice(self, axis: int, index: int) -> QMatrix:
        """Contraction by the index-th dual basis vector of the given axis."""
        if axis not in (0, 1, 2):
            raise ValueError("axis must be 0, 1 or 2")
        if not 0 <= index < self.dims[axis]:
            raise ValueError(f"index {index} out of range on axis {axis}")
        rest = [d for a, d in enumerate(self.dims) if a != axis]
        m = [[Fraction(0)] * rest[1] for _ in range(rest[0])]
        for (i, j, k), c in self.entries.items():
            idx = (i, j, k)
            if idx[axis] != index:
                continue
            rc = [x for a, x in enumerate(idx) if a != axis]
            m[rc[0]][rc[1]] = c
        return m

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "dims": list(self.dims),
            "entries": [[i, j, k, str(c)]
                        for (i, j, k), c in sorted(self.entries.items())],
        }
        if self.labels is not None:
            doc["labels"] = [list(ax) for ax in self.labels]
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Tensor3":
        doc = json.loads(text)
        entries = {(i, j, k): Fraction(v) for i, j, k, v in doc["entries"]}
        return cls(doc["dims"], entries, doc.get("labels"))


def is_concise(T: Tensor3) -> Tuple[bool, List[int]]:
    """Full flattening rank on every axis; returns (ok, failing axes)."""
    bad = []
    for axis in range(3):
        n = T.dims[axis]
        rest = [d for a, d in enumerate(T.dims) if a != axis]
        flat = [[Fraction(0)] * (rest[0] * rest[1]) for _ in range(n)]
        for idx, c in T.entries.items():
            rc = [x for a, x in enumerate(idx) if a != axis]
            flat[idx[axis]][rc[0] * rest[1] + rc[1]] = c
        if rank(flat) != n:
            bad.append(axis)
    return (not bad, bad)


# -- constructions -------------------------------------------------------------


def cw(n: int) -> Tensor3:
    """The three-sum tensor on K^n: unit row, unit column, and the middle
    squares landing on the top vector.  Support size 3n-3."""
    if n < 3:
        raise ValueError("need n >= 3")
    entries: Dict[Index3, Rat] = {}
    for i in range(n):
        entries[(0, i, i)] = Fraction(1)
    for i in range(1, n):
        entries[(i, 0, i)] = Fraction(1)
    for i in range(1, n - 1):
        entries[(i, i, n - 1)] = Fraction(1)
    labels = ["e1"] + [f"e{i + 1}" for i in range(1, n)]
    return Tensor3((n, n, n), entries, (labels, labels, labels))


class AbelianGroup:
    """Finite product of cyclic groups, elements enumerated lexicographically."""

    def __init__(self, orders: Sequence[int]):
        self.orders = tuple(int(m) for m in orders)
        if not self.orders or any(m < 1 for m in self.orders):
            raise ValueError("cyclic orders must be positive")
        self.elements: List[Tuple[int, ...]] = [
            tuple(e) for e in itertools.product(*(range(m) for m in self.orders))
        ]
        self._index = {e: i for i, e in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    @property
    def neutral(self) -> Tuple[int, ...]:
        return self.elements[0]

    def add(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def index(self, e: Tuple[int, ...]) -> int:
        return self._index[e]

    def element_name(self, e: Tuple[int, ...]) -> str:
        return "+".join(str(x) for x in e)


def group_tensor(G: AbelianGroup) -> Tensor3:
    """Addition-table tensor: one unit entry per pair (g1, g2) at g1+g2."""
    n = len(G)
    entries: Dict[Index3, Rat] = {}
    for a in G.elements:
        for b in G.elements:
            entries[(G.index(a), G.index(b), G.index(G.add(a, b)))] = Fraction(1)
    names = [G.element_name(e) for e in G.elements]
    return Tensor3((n, n, n), entries, (names, names, names))


MultTable = List[List[List[Rat]]]  # table[i][j][k] = coeff of b_k in b_i*b_j


def structure_tensor(table: Sequence[Sequence[Sequence]],
                     labels: Optional[Sequence[str]] = None) -> Tensor3:
    """Multiplication tensor of a commutative algebra in a fixed basis."""
    n = len(table)
    tab = [[[rat(c) for c in table[i][j]] for j in range(n)] for i in range(n)]
    for i in range(n):
        if len(tab[i]) != n or any(len(tab[i][j]) != n for j in range(n)):
            raise ValueError("multiplication table is not n x n x n")
    for i in range(n):
        for j in range(i):
            if tab[i][j] != tab[j][i]:
                raise ValueError(f"table not symmetric at ({i},{j})")
    entries = {(i, j, k): tab[i][j][k]
               for i in range(n) for j in range(n) for k in range(n)
               if tab[i][j][k]}
    lab = (tuple(labels),) * 3 if labels is not None else None
    return Tensor3((n, n, n), entries, lab)


def table_tensor_power(table: Sequence[Sequence[Sequence]], N: int) -> MultTable:
    """Multiplication table of the N-fold tensor-product algebra.

    Basis = length-N index sequences in lexicographic (row-major) order, so
    the result is directly comparable with Kronecker powers of the original
    structure tensor.
    """
    n = len(table)
    tab = [[[rat(c) for c in row] for row in plane] for plane in table]
    seqs = list(itertools.product(range(n), repeat=N))
    pos = {s: i for i, s in enumerate(seqs)}
    out: MultTable = [[[Fraction(0)] * len(seqs) for _ in seqs] for _ in seqs]
    for s1 in seqs:
        for s2 in seqs:
            # product of per-coordinate products, expanded distributively
            terms = [((), Fraction(1))]
            for a, b in zip(s1, s2):
                new = []
                for prefix, c in terms:
                    for k in range(n):
                        ck = tab[a][b][k]
                        if ck:
                            new.append((prefix + (k,), c * ck))
                terms = new
            for s3, c in terms:
                out[pos[s1]][pos[s2]][pos[s3]] += c
    return out


class PartiallySymmetricTensor:
    """m symmetric n x n slices (an element of S^2(K^n) tensor K^m)."""

    def __init__(self, slices: Sequence[QMatrix]):
        self.slices = [[[rat(c) for c in row] for row in s] for s in slices]
        if not self.slices:
            raise ValueError("need at least one slice")
        self.m = len(self.slices)
        self.n = len(self.slices[0])
        for s in self.slices:
            if len(s) != self.n or any(len(row) != self.n for row in s):
                raise ValueError("slices must be square and equal-sized")
            for i in range(self.n):
                for j in range(i):
                    if s[i][j] != s[j][i]:
                        raise ValueError(f"slice not symmetric at ({i},{j})")

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "m": self.m,
            "slices": [[[str(c) for c in row] for row in s] for s in self.slices],
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "PartiallySymmetricTensor":
        doc = json.loads(text)
        return cls([[[Fraction(c) for c in row] for row in s]
                    for s in doc["slices"]])


def algebra_A_Tk(T: PartiallySymmetricTensor, k: int) -> Tensor3:
    """Multiplication tensor of the graded local algebra built from T.

    Basis (unit, x_1..x_n, y_1..y_k, z_1..z_m): the unit acts as identity,
    x_i * x_j = sum_l T.slices[l][i][j] * z_l, the y's are annihilated by
    everything but the unit, and all remaining products vanish.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n, m = T.n, T.m
    dim = 1 + n + k + m
    entries: Dict[Index3, Rat] = {}
    for b in range(dim):
        entries[(0, b, b)] = Fraction(1)
        if b:
            entries[(b, 0, b)] = Fraction(1)
    for i in range(n):
        for j in range(n):
            for l in range(m):
                c = T.slices[l][i][j]
                if c:
                    entries[(1 + i, 1 + j, 1 + n + k + l)] = c
    labels = (["j"] + [f"x{i + 1}" for i in range(n)]
              + [f"y{i + 1}" for i in range(k)]
              + [f"z{i + 1}" for i in range(m)])
    return Tensor3((dim, dim, dim), entries, (labels, labels, labels))


def symmetrize_TS(T: Tensor3) -> PartiallySymmetricTensor:
    """Pack each contraction by the third axis into a 2n x 2n symmetric slice:
    the original matrix on the (1,2) block and its transpose on (2,1)."""
    if T.dims[0] != T.dims[1]:
        raise ValueError("first two dims must agree")
    n, m = T.dims[0], T.dims[2]
    slices = []
    for l in range(m):
        s = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
        for (i, j, kk), c in T.entries.items():
            if kk == l:
                s[i][n + j] = c
                s[n + j][i] = c
        slices.append(s)
    return PartiallySymmetricTensor(slices)


def one_generic_extension(T: Tensor3, k: int) -> Tensor3:
    """Extend a concise tensor to one with an identity slice.

    Output lives in K^(a+1) x K^(b+k) x K^(b+k): the new first-axis index 0
    contracts to the identity, and the original entries keep their second
    index while their third index moves into the last c coordinates.
    Restricting to the original coordinates recovers T.
    """
    ok, bad = is_concise(T)
    if not ok:
        raise ValueError(f"input not concise on axes {bad}")
    a, b, c = T.dims
    if k < 0 or b + k < c:
        raise ValueError(f"need k >= 0 with b+k >= c (b={b}, k={k}, c={c})")
    w = b + k
    entries: Dict[Index3, Rat] = {(0, j, j): Fraction(1) for j in range(w)}
    shift = w - c
    for (i, j, l), val in T.entries.items():
        entries[(i + 1, j, shift + l)] = val
    return Tensor3((a + 1, w, w), entries)


def kronecker_power(T: Tensor3, N: int,
                    max_entries: Optional[int] = None) -> Tensor3:
    """N-th Kronecker power; index sequences flatten row-major."""
    if N < 1:
        raise ValueError("need N >= 1")
    guards.check_entries(len(T.entries) ** N, max_entries)
    d1, d2, d3 = T.dims
    dims = (d1 ** N, d2 ** N, d3 ** N)
    guards.check_entries(max(dims), max_entries)
    entries: Dict[Index3, Rat] = {}
    for combo in itertools.product(T.entries.items(), repeat=N):
        i = j = k = 0
        c = Fraction(1)
        for (a, b, cc), val in combo:
            i = i * d1 + a
            j = j * d2 + b
            k = k * d3 + cc
            c *= val
        entries[(i, j, k)] = c
    labels = None
    if T.labels is not None:
        labels = tuple(
            [",".join(ax[x] for x in seq)
             for seq in itertools.product(range(d), repeat=N)]
            for ax, d in zip(T.labels, T.dims)
        )
    return Tensor3(dims, entries, labels)
