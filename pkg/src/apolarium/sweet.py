"""Blockings, tightness, marginal-matching projections, and rank bounds.

A blocking labels each basis vector of each tensor factor with a vector in
Z^r.  Kronecker powers add labels coordinatewise, so a distribution P on the
support blocks singles out, for each axis, the index sequences whose label
composition matches N times the corresponding marginal of P.  Keeping those
sequences on all three axes gives the sweet piece SP_{P,N}(T); keeping them
on two axes and leaving the third free gives a chimney, whose all-zero
layers feed the substitution bound.

Axes are 0-based throughout (axis pair (0,1) = first and second factor);
the command-line layer translates from 1-based flags.
"""

from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import guards
from .exact import Rat, kernel_basis, rat
from .tensor3 import Tensor3

Label = Tuple[int, ...]
LabelTriple = Tuple[Label, Label, Label]


def _as_label(x) -> Label:
    if isinstance(x, int):
        return (x,)
    return tuple(int(v) for v in x)


class Blocking:
    """Three label tables, one vector in Z^r per basis index per axis."""

    def __init__(self, labels: Sequence[Sequence]):
        if len(labels) != 3:
            raise ValueError("need label tables for exactly three axes")
        self.labels: Tuple[Tuple[Label, ...], ...] = tuple(
            tuple(_as_label(x) for x in ax) for ax in labels)
        rs = {len(l) for ax in self.labels for l in ax}
        if len(rs) != 1:
            raise ValueError(f"label vectors of mixed arity {sorted(rs)}")
        self.r = rs.pop()

    def axis_dim(self, axis: int) -> int:
        return len(self.labels[axis])

    def label(self, axis: int, index: int) -> Label:
        return self.labels[axis][index]

    def check_tensor(self, T: Tensor3):
        if tuple(self.axis_dim(a) for a in range(3)) != T.dims:
            raise ValueError(f"blocking covers dims "
                             f"{tuple(self.axis_dim(a) for a in range(3))}, "
                             f"tensor has {T.dims}")

    def to_json(self) -> str:
        return json.dumps({"labels": [[list(l) for l in ax]
                                      for ax in self.labels]}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Blocking":
        return cls(json.loads(text)["labels"])


def cw_blocking(n: int) -> Blocking:
    """Unit vector -> 0, middle -> 1, top -> 2 on the first two axes, negated
    on the third.  Used for the three-sum tensors and for group tensors with
    the distinguished element last."""
    if n < 3:
        raise ValueError("need n >= 3")
    fwd = [(0,)] + [(1,)] * (n - 2) + [(2,)]
    neg = [(0,)] + [(-1,)] * (n - 2) + [(-2,)]
    return Blocking([fwd, fwd, neg])


def weight_blocking(weights: Sequence[int]) -> Blocking:
    """Scalar weights per index on the first two axes, negated on the third."""
    fwd = [(int(w),) for w in weights]
    neg = [(-int(w),) for w in weights]
    return Blocking([fwd, fwd, neg])


def blocking_power(B: Blocking, N: int) -> Blocking:
    """Induced blocking on the N-th Kronecker power: labels add coordinatewise
    along each index sequence (sequences in lexicographic flat order)."""
    tables = []
    for ax in B.labels:
        table = []
        for seq in itertools.product(range(len(ax)), repeat=N):
            total = tuple(sum(ax[i][t] for i in seq) for t in range(B.r))
            table.append(total)
        tables.append(table)
    return Blocking(tables)


@dataclass
class Block:
    labels: LabelTriple
    format: Tuple[int, int, int]
    tensor: Tensor3
    index_sets: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


def support_blocks(T: Tensor3, B: Blocking) -> List[Block]:
    """Partition of the nonzero entries by label triple.

    The format of a block is the size of the full label class on each axis
    (not just the indices that happen to occur in an entry).
    """
    B.check_tensor(T)
    classes = []
    for axis in range(3):
        cls: Dict[Label, List[int]] = {}
        for i in range(T.dims[axis]):
            cls.setdefault(B.label(axis, i), []).append(i)
        classes.append(cls)
    grouped: Dict[LabelTriple, Dict[Tuple[int, int, int], Rat]] = {}
    for (i, j, k), c in T.entries.items():
        key = (B.label(0, i), B.label(1, j), B.label(2, k))
        grouped.setdefault(key, {})[(i, j, k)] = c
    out = []
    for key in sorted(grouped):
        sets = tuple(tuple(classes[a][key[a]]) for a in range(3))
        pos = [{i: t for t, i in enumerate(s)} for s in sets]
        fmt = tuple(len(s) for s in sets)
        sub = {(pos[0][i], pos[1][j], pos[2][k]): c
               for (i, j, k), c in grouped[key].items()}
        out.append(Block(key, fmt, Tensor3(fmt, sub), sets))
    return out


def is_tight(T: Tensor3, B: Blocking) -> bool:
    """Do all support-block labels sum to the zero vector?"""
    B.check_tensor(T)
    for (i, j, k) in T.entries:
        total = tuple(a + b + c for a, b, c in zip(
            B.label(0, i), B.label(1, j), B.label(2, k)))
        if any(total):
            return False
    return True


class BlockDistribution:
    """Probability distribution on a set of label triples."""

    def __init__(self, support: Sequence, probs: Sequence):
        self.support: List[LabelTriple] = [
            tuple(_as_label(a) for a in trip) for trip in support]
        self.probs: List[Rat] = [rat(p) for p in probs]
        if len(self.support) != len(self.probs):
            raise ValueError("support/probs length mismatch")
        if len(set(self.support)) != len(self.support):
            raise ValueError("support triples must be distinct")
        if any(p < 0 for p in self.probs):
            raise ValueError("negative probability")
        if sum(self.probs) != 1:
            raise ValueError(f"probabilities sum to {sum(self.probs)}, not 1")

    def to_json(self) -> str:
        return json.dumps({
            "support": [[list(a) for a in trip] for trip in self.support],
            "probs": [str(p) for p in self.probs],
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "BlockDistribution":
        doc = json.loads(text)
        return cls(doc["support"], [Fraction(p) for p in doc["probs"]])

    @classmethod
    def uniform(cls, triples: Sequence) -> "BlockDistribution":
        n = len(list(triples))
        return cls(triples, [Fraction(1, n)] * n)


def marginals(P: BlockDistribution) -> Tuple[Dict[Label, Rat], ...]:
    out: List[Dict[Label, Rat]] = [{}, {}, {}]
    for trip, p in zip(P.support, P.probs):
        for axis in range(3):
            out[axis][trip[axis]] = out[axis].get(trip[axis], Fraction(0)) + p
    return tuple(out)


def marginal_uniqueness(P: BlockDistribution) -> str:
    """'unique' when P is the only distribution on its support with these
    marginals; 'non_unique' when a signed null direction of the marginal
    system stays nonnegative at P; else 'unknown' (sufficient conditions
    only)."""
    marg = marginals(P)
    nvars = len(P.support)
    rows = []
    for axis in range(3):
        for lab in sorted(marg[axis]):
            rows.append([Fraction(1) if P.support[t][axis] == lab else Fraction(0)
                         for t in range(nvars)])
    null = kernel_basis(rows)
    if not null:
        return "unique"
    for v in null:
        for direction in (v, [-x for x in v]):
            if all(P.probs[t] > 0 or direction[t] >= 0 for t in range(nvars)):
                return "non_unique"
    return "unknown"


def _composition(marg: Dict[Label, Rat], N: int) -> Dict[Label, int]:
    comp = {}
    for lab, p in marg.items():
        cnt = p * N
        if cnt.denominator != 1:
            raise ValueError(f"N*marginal is not integral at {lab}: {cnt}")
        if cnt:
            comp[lab] = int(cnt)
    return comp


def _kept_sequences(B: Blocking, axis: int, comp: Dict[Label, int], N: int,
                    max_entries: Optional[int]) -> List[Tuple[int, ...]]:
    d = B.axis_dim(axis)
    guards.check_entries(d ** N, max_entries)
    want = Counter(comp)
    out = []
    for seq in itertools.product(range(d), repeat=N):
        if Counter(B.label(axis, i) for i in seq) == want:
            out.append(seq)
    return out


def _validate_distribution(T: Tensor3, B: Blocking, P: BlockDistribution,
                           check_tight: bool):
    B.check_tensor(T)
    if check_tight and not is_tight(T, B):
        raise ValueError("tensor is not tight for this blocking "
                         "(pass check_tight=False to project anyway)")
    blocks = {b.labels for b in support_blocks(T, B)}
    for trip, p in zip(P.support, P.probs):
        if p and trip not in blocks:
            raise ValueError(f"distribution charges non-support block {trip}")
    marg = marginals(P)
    profiles = [sorted(m.values()) for m in marg]
    if not profiles[0] == profiles[1] == profiles[2]:
        raise ValueError(f"marginal probability profiles differ: {profiles}")
    return marg


@dataclass
class SweetPiece:
    tensor: Tensor3
    kept: Tuple[List[Tuple[int, ...]], ...]
    label_seqs: Tuple[List[Tuple[Label, ...]], ...]
    p_T: int


def sp_extract(T: Tensor3, B: Blocking, P: BlockDistribution, N: int,
               check_tight: bool = True,
               max_entries: Optional[int] = None) -> SweetPiece:
    """Project the N-th Kronecker power onto the marginal-matching sequences
    of all three axes."""
    marg = _validate_distribution(T, B, P, check_tight)
    comps = [_composition(m, N) for m in marg]
    kept = [_kept_sequences(B, a, comps[a], N, max_entries) for a in range(3)]
    kept_pos = [{s: t for t, s in enumerate(ks)} for ks in kept]
    guards.check_entries(len(T.entries) ** N, max_entries)
    entries: Dict[Tuple[int, int, int], Rat] = {}
    for combo in itertools.product(T.entries.items(), repeat=N):
        s = tuple(tuple(idx[a] for idx, _ in combo) for a in range(3))
        if s[0] in kept_pos[0] and s[1] in kept_pos[1] and s[2] in kept_pos[2]:
            val = math.prod((c for _, c in combo), start=Fraction(1))
            key = (kept_pos[0][s[0]], kept_pos[1][s[1]], kept_pos[2][s[2]])
            entries[key] = entries.get(key, Fraction(0)) + val
    label_seqs = [[tuple(B.label(a, i) for i in seq) for seq in kept[a]]
                  for a in range(3)]
    pts = [len(set(ls)) for ls in label_seqs]
    if len(set(pts)) != 1:
        raise ValueError(f"label-sequence counts differ across axes: {pts}")
    dims = tuple(max(1, len(ks)) for ks in kept)
    return SweetPiece(Tensor3(dims, entries), tuple(kept),
                      tuple(label_seqs), pts[0])


def chimney(T: Tensor3, B: Blocking, P: BlockDistribution, N: int,
            fixed_pair: Tuple[int, int] = (0, 1),
            check_tight: bool = True,
            max_entries: Optional[int] = None) -> Tensor3:
    """Restrict two axes to their marginal-matching sequences; the remaining
    axis keeps the full index range of the power (lexicographic flat order)."""
    fixed = tuple(sorted(fixed_pair))
    if len(set(fixed)) != 2 or not all(a in (0, 1, 2) for a in fixed):
        raise ValueError(f"fixed_pair must be two distinct axes, got {fixed_pair}")
    free = ({0, 1, 2} - set(fixed)).pop()
    marg = _validate_distribution(T, B, P, check_tight)
    kept_pos: List[Optional[Dict[Tuple[int, ...], int]]] = [None, None, None]
    dims = [0, 0, 0]
    for a in fixed:
        ks = _kept_sequences(B, a, _composition(marg[a], N), N, max_entries)
        kept_pos[a] = {s: t for t, s in enumerate(ks)}
        dims[a] = max(1, len(ks))
    dims[free] = T.dims[free] ** N
    guards.check_entries(max(dims), max_entries)
    guards.check_entries(len(T.entries) ** N, max_entries)
    dfree = T.dims[free]
    entries: Dict[Tuple[int, int, int], Rat] = {}
    for combo in itertools.product(T.entries.items(), repeat=N):
        s = tuple(tuple(idx[a] for idx, _ in combo) for a in range(3))
        if any(s[a] not in kept_pos[a] for a in fixed):
            continue
        val = math.prod((c for _, c in combo), start=Fraction(1))
        key = [0, 0, 0]
        for a in fixed:
            key[a] = kept_pos[a][s[a]]
        flat = 0
        for i in s[free]:
            flat = flat * dfree + i
        key[free] = flat
        tk = tuple(key)
        entries[tk] = entries.get(tk, Fraction(0)) + val
    return Tensor3(tuple(dims), entries)


def toric_degenerate(T: Tensor3, B: Blocking,
                     weights: Sequence[Sequence[int]]) -> Tensor3:
    """Kill the entries of positive total weight; keep the weight-zero ones.

    weights = three integer arrays, one value per basis index per axis,
    validated to factor through the blocking's label classes.  Any support
    entry of negative total weight makes the degeneration invalid.
    """
    B.check_tensor(T)
    w = [list(map(int, ax)) for ax in weights]
    if [len(ax) for ax in w] != list(T.dims):
        raise ValueError("weight arrays must match the tensor dims")
    for axis in range(3):
        by_label: Dict[Label, int] = {}
        for i, wi in enumerate(w[axis]):
            lab = B.label(axis, i)
            if lab in by_label and by_label[lab] != wi:
                raise ValueError(
                    f"weights do not factor through labels on axis {axis}")
            by_label[lab] = wi
    entries = {}
    for (i, j, k), c in T.entries.items():
        total = w[0][i] + w[1][j] + w[2][k]
        if total < 0:
            raise ValueError(f"support entry {(i, j, k)} has negative weight "
                             f"{total}: invalid degeneration")
        if total == 0:
            entries[(i, j, k)] = c
    return Tensor3(T.dims, entries, T.labels)


def zero_layers(T: Tensor3, axis: int) -> int:
    """Number of indices along the axis whose slice is identically zero."""
    if axis not in (0, 1, 2):
        raise ValueError("axis must be 0, 1 or 2")
    hit = {idx[axis] for idx in T.entries}
    return T.dims[axis] - len(hit)


MINIMAL_RANK_FAMILIES = ("group-power", "binary-power")


def substitution_bound(ambient_dim: int, zero_layer_count: int) -> int:
    """Rank bound ambient_dim - zero_layer_count for a minimal-rank ambient
    tensor (group-tensor powers and their binary case qualify; see the
    command-line layer for the caller-asserted whitelist)."""
    if zero_layer_count < 0 or zero_layer_count > ambient_dim:
        raise ValueError("zero-layer count out of range")
    return ambient_dim - zero_layer_count


def formula_sweet_rank(n: int, N: int, p, q=None) -> int:
    """Closed-form rank bound n^N - binom(N, (2p+2q)N+1) (n-1)^((p+q)N-1)
    for the three-large/three-small block distribution (p on large, q on
    small, p+q = 1/3)."""
    p = rat(p)
    q = rat(q) if q is not None else Fraction(1, 3) - p
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    if p + q != Fraction(1, 3):
        raise ValueError(f"p+q must be 1/3, got {p + q}")
    for name, val in (("p*N", p * N), ("q*N", q * N)):
        if val.denominator != 1:
            raise ValueError(f"{name} = {val} is not integral")
    top = (2 * p + 2 * q) * N + 1
    low = (p + q) * N - 1
    if top.denominator != 1 or low.denominator != 1 or low < 0:
        raise ValueError("block counts are out of range for this N")
    return n ** N - math.comb(N, int(top)) * (n - 1) ** int(low)


def even_symdiff_count(k: int) -> int:
    """Number of distinct symmetric differences of two k-subsets of a 3k set:
    sum of binom(3k, 2i) for i = 0..k, cross-checked by enumeration for
    k <= 4."""
    if k < 1:
        raise ValueError("need k >= 1")
    closed = sum(math.comb(3 * k, 2 * i) for i in range(k + 1))
    if k <= 4:
        ground = range(3 * k)
        seen = set()
        for A in itertools.combinations(ground, k):
            sa = set(A)
            for Bset in itertools.combinations(ground, k):
                seen.add(frozenset(sa.symmetric_difference(Bset)))
        if len(seen) != closed:
            raise AssertionError(
                f"enumeration {len(seen)} disagrees with closed form {closed}")
    return closed


def formula_pratt(k: int) -> int:
    """Rank bound (8^k)/2 - sum of binom(3k, 2i) for i = k+1 .. floor(3k/2)."""
    if k < 1:
        raise ValueError("need k >= 1")
    return 8 ** k // 2 - sum(math.comb(3 * k, 2 * i)
                             for i in range(k + 1, 3 * k // 2 + 1))


def omega_bound(a: int, r, p) -> float:
    """log base a of r/p; the single floating-point output of the package."""
    if int(a) != a or a <= 1:
        raise ValueError("a must be an integer > 1")
    r = rat(r)
    p = rat(p)
    if p <= 0 or r < p:
        raise ValueError("need r >= p > 0")
    return math.log(r / p, a)


def veronese_dims(graded_dims: Sequence[int], k: int) -> List[int]:
    """Every k-th graded dimension, starting from degree 0."""
    if k < 1:
        raise ValueError("need k >= 1")
    return list(graded_dims)[::k]


# -- validators for constructed sweet pieces -----------------------------------


def sweet_piece_report(sp: SweetPiece) -> dict:
    """Constructive checks on a sweet piece: the uniform distribution on its
    support blocks has equal uniform marginals, the label-sequence count is
    the same on every axis, and the support blocks share format and entry
    multiset."""
    cls = []
    for a in range(3):
        m: Dict[Tuple[Label, ...], List[int]] = {}
        for idx, ls in enumerate(sp.label_seqs[a]):
            m.setdefault(ls, []).append(idx)
        cls.append(m)
    grouped: Dict[tuple, Dict[Tuple[int, int, int], Rat]] = {}
    for (i, j, k), c in sp.tensor.entries.items():
        key = (sp.label_seqs[0][i], sp.label_seqs[1][j], sp.label_seqs[2][k])
        grouped.setdefault(key, {})[(i, j, k)] = c
    formats = set()
    multisets = set()
    axis_counts = [Counter() for _ in range(3)]
    for key, ent in grouped.items():
        formats.add(tuple(len(cls[a][key[a]]) for a in range(3)))
        multisets.add(tuple(sorted(ent.values())))
        for a in range(3):
            axis_counts[a][key[a]] += 1
    marg_uniform = all(len(set(c.values())) <= 1 for c in axis_counts)
    p_ts = [len(c) for c in axis_counts]
    return {
        "support_blocks": len(grouped),
        "formats_equal": len(formats) <= 1,
        "entry_multisets_equal": len(multisets) <= 1,
        "marginals_uniform": marg_uniform,
        "marginal_block_counts": p_ts,
        "p_T": sp.p_T,
        "p_T_consistent": len(set([sp.p_T] +
                                  [len(set(ls)) for ls in sp.label_seqs])) == 1,
        "note": "sufficient-condition check: format equality plus entry-"
                "multiset equality per block; full block-isomorphism testing "
                "is not decided here",
    }
