"""Reduced simplicial homology over a field via augmented boundary matrices.

The chain complex is augmented: the empty face spans C_{-1}, so the empty
complex has one unit of homology in degree -1.  Betti numbers come from
b_i = dim C_i - rank d_i - rank d_{i+1}.

Three coefficient choices: GF(2) (bitset elimination, the fast default),
GF(p) for odd primes (numpy elimination mod p), and exact rationals
(Fraction elimination).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .complexes import Complex, DEFAULT_FACE_CAP, all_faces
from .graphs import bits, popcount

__all__ = [
    "FieldSpec",
    "GF2",
    "GF3",
    "RATIONALS",
    "BettiVector",
    "boundary_matrices",
    "betti",
    "total_betti",
    "reduced_euler",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: a prime field GF(p) or the exact rationals."""

    variant: str  # "prime" or "rational"
    p: int | None = None

    def __post_init__(self):
        if self.variant == "prime":
            if self.p is None or not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"p={self.p} is not a usable prime")
        elif self.variant != "rational":
            raise ValueError(f"unknown field variant {self.variant!r}")

    @classmethod
    def parse(cls, name: str) -> "FieldSpec":
        name = name.strip().lower()
        if name in ("rational", "rationals", "q"):
            return cls("rational")
        if name.startswith("gf"):
            return cls("prime", int(name[2:]))
        raise ValueError(f"unknown field {name!r}; use gf<p> or rational")

    def __str__(self):
        return f"gf{self.p}" if self.variant == "prime" else "rational"


GF2 = FieldSpec("prime", 2)
GF3 = FieldSpec("prime", 3)
RATIONALS = FieldSpec("rational")


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers by degree, degree -1 included."""

    by_degree: tuple[tuple[int, int], ...]  # (degree, b_degree), nonzero only
    field: FieldSpec

    def __getitem__(self, degree: int) -> int:
        return dict(self.by_degree).get(degree, 0)

    def total(self) -> int:
        return sum(b for _, b in self.by_degree)

    def top_degree(self):
        return max((d for d, _ in self.by_degree), default=None)

    def to_json_dict(self) -> dict:
        return {
            "betti": {str(d): b for d, b in self.by_degree},
            "total": self.total(),
            "field": str(self.field),
        }


# ---------------------------------------------------------------------------
# boundary matrices in a field-agnostic sparse form

@dataclass(frozen=True)
class SparseMatrix:
    """Column-major signed incidence matrix; entries are (row, +-1)."""

    rows: int
    cols: int
    columns: tuple[tuple[tuple[int, int], ...], ...]


def _faces_by_dim(k: Complex, cap: int) -> list[list[int]]:
    faces = all_faces(k, cap)
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(popcount(f) - 1, []).append(f)
    top = max(by_dim)
    return [sorted(by_dim.get(d, [])) for d in range(-1, top + 1)]


def boundary_matrices(k: Complex, cap: int = DEFAULT_FACE_CAP) -> list[SparseMatrix]:
    """Matrices d_i: C_i -> C_{i-1} for i = 0..dim, over sorted face bases.
    Index 0 of the returned list is the augmentation d_0: C_0 -> C_{-1}."""
    if k.is_void:
        raise ValueError("void complex has no chain complex")
    layers = _faces_by_dim(k, cap)  # layers[j] holds faces of dim j-1
    mats = []
    for j in range(1, len(layers)):
        lower_index = {f: i for i, f in enumerate(layers[j - 1])}
        cols = []
        for f in layers[j]:
            entries = []
            for pos, v in enumerate(bits(f)):
                entries.append((lower_index[f & ~(1 << v)], -1 if pos & 1 else 1))
            cols.append(tuple(entries))
        mats.append(SparseMatrix(len(layers[j - 1]), len(layers[j]), tuple(cols)))
    return mats


# ---------------------------------------------------------------------------
# ranks

def _rank_gf2(m: SparseMatrix) -> int:
    rank = 0
    basis: dict[int, int] = {}  # leading bit -> reduced vector
    for col in m.columns:
        row = sum(1 << r for r, _ in col)
        while row:
            lead = row.bit_length() - 1
            if lead in basis:
                row ^= basis[lead]
            else:
                basis[lead] = row
                rank += 1
                break
    return rank


def _rank_gfp(m: SparseMatrix, p: int) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    a = np.zeros((m.cols, m.rows), dtype=np.int64)
    for j, col in enumerate(m.columns):
        for r, s in col:
            a[j, r] = s % p
    rank = 0
    row = 0
    for col in range(m.rows):
        piv = None
        for r in range(row, m.cols):
            if a[r, col] % p:
                piv = r
                break
        if piv is None:
            continue
        a[[row, piv]] = a[[piv, row]]
        inv = pow(int(a[row, col]), p - 2, p)
        a[row] = a[row] * inv % p
        mask = a[row + 1:, col] % p != 0
        if mask.any():
            a[row + 1:][mask] = (a[row + 1:][mask] - np.outer(a[row + 1:, col][mask], a[row])) % p
        rank += 1
        row += 1
        if row == m.cols:
            break
    return rank


def _rank_rational(m: SparseMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    a: list[list[Fraction]] = [[Fraction(0)] * m.rows for _ in range(m.cols)]
    for j, col in enumerate(m.columns):
        for r, s in col:
            a[j][r] = Fraction(s)
    rank = 0
    row = 0
    for col in range(m.rows):
        piv = next((r for r in range(row, m.cols) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = a[row][col]
        a[row] = [x / inv for x in a[row]]
        for r in range(row + 1, m.cols):
            if a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[row])]
        rank += 1
        row += 1
        if row == m.cols:
            break
    return rank


def matrix_rank(m: SparseMatrix, field: FieldSpec) -> int:
    if field.variant == "rational":
        return _rank_rational(m)
    if field.p == 2:
        return _rank_gf2(m)
    return _rank_gfp(m, field.p)


# ---------------------------------------------------------------------------
# Betti numbers

def betti(k: Complex, field: FieldSpec = GF2, cap: int = DEFAULT_FACE_CAP) -> BettiVector:
    """Reduced Betti numbers of k.  The void complex is all zeros."""
    if k.is_void:
        return BettiVector((), field)
    layers = _faces_by_dim(k, cap)
    mats = boundary_matrices(k, cap)
    ranks = [matrix_rank(m, field) for m in mats] + [0]
    out = []
    for j, faces in enumerate(layers):
        degree = j - 1
        rank_in = ranks[j] if j < len(mats) + 1 else 0
        rank_out = ranks[j - 1] if j >= 1 else 0
        b = len(faces) - rank_out - rank_in
        if b:
            out.append((degree, b))
    return BettiVector(tuple(out), field)


def total_betti(k: Complex, field: FieldSpec = GF2, cap: int = DEFAULT_FACE_CAP) -> int:
    return betti(k, field, cap).total()


def reduced_euler(k: Complex, cap: int = DEFAULT_FACE_CAP) -> int:
    """Reduced Euler characteristic: alternating face count over the
    augmented f-vector (the empty complex gives -1)."""
    if k.is_void:
        raise ValueError("void complex has no Euler characteristic")
    chi = 0
    for f in all_faces(k, cap):
        # a face on c vertices has dimension c-1 and sign (-1)^(c-1)
        chi += -1 if popcount(f) % 2 == 0 else 1
    return chi
