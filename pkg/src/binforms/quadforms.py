"""Exact symmetric linear algebra: catalecticant and Hankel blocks, inertia
via rational congruence, fraction-free kernels, psd tests, width.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import (
    DimensionMismatchError,
    OddDegreeError,
    RankOutOfRangeError,
)
from .forms import BinaryForm
from .realroots import UniPoly, sign_variations


@dataclass(frozen=True)
class Inertia:
    pos: int
    neg: int
    null: int

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    def pair(self) -> Tuple[int, int]:
        return (self.pos, self.neg)

    def __repr__(self):
        return f"Inertia(pos={self.pos}, neg={self.neg}, null={self.null})"


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric matrix with exact rational entries."""

    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatchError("matrix is not square")
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise DimensionMismatchError("matrix is not symmetric")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class HankelMatrix:
    """The (d-r+1) x (r+1) block with entry(i, j) = a_{i+j} of a source form."""

    rows: Tuple[Tuple[Fraction, ...], ...]
    r: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.r + 1

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, vec: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        if len(vec) != self.ncols:
            raise DimensionMismatchError("vector length does not match columns")
        return tuple(
            sum(row[j] * Fraction(vec[j]) for j in range(self.ncols))
            for row in self.rows
        )


def catalecticant(p: BinaryForm) -> SymMatrix:
    """The (s+1) x (s+1) middle Hankel matrix of an even form of degree 2s."""
    if p.degree % 2 != 0:
        raise OddDegreeError("catalecticant needs an even-degree form")
    s = p.degree // 2
    return SymMatrix(
        tuple(tuple(p.coeffs[i + j] for j in range(s + 1)) for i in range(s + 1))
    )


def hankel(p: BinaryForm, r: int) -> HankelMatrix:
    """Hankel block whose kernel vectors are Sylvester-form candidates."""
    if not 1 <= r <= p.degree:
        raise RankOutOfRangeError(f"need 1 <= r <= {p.degree}, got {r}")
    d = p.degree
    return HankelMatrix(
        tuple(tuple(p.coeffs[i + j] for j in range(r + 1)) for i in range(d - r + 1)),
        r,
    )


def inertia(m: SymMatrix) -> Inertia:
    """Exact (pos, neg, null) by symmetric Gaussian congruence.

    Diagonal pivots when available; otherwise the congruence t_i <- t_i + t_j
    on a nonzero off-diagonal pair surfaces one.
    """
    n = m.n
    a = [list(row) for row in m.entries]
    pos = neg = 0
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            hot = next(
                (
                    (i, j)
                    for i in range(k, n)
                    for j in range(i + 1, n)
                    if a[i][j] != 0
                ),
                None,
            )
            if hot is None:
                return Inertia(pos, neg, n - pos - neg)
            i, j = hot
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] / d
            for t in range(k, n):
                a[i][t] -= f * a[k][t]
            for t in range(k, n):
                a[t][i] -= f * a[t][k]
    return Inertia(pos, neg, n - pos - neg)


def is_psd(m: SymMatrix) -> bool:
    return inertia(m).neg == 0


def kernel_basis(rows_or_matrix) -> List[Tuple[Fraction, ...]]:
    """Exact right-kernel basis via fraction-free (Bareiss) elimination.

    Accepts a HankelMatrix, SymMatrix, or a plain sequence of rows; returns
    primitive integer vectors with positive leading entry, one per free column.
    """
    if isinstance(rows_or_matrix, HankelMatrix):
        rows = [list(r) for r in rows_or_matrix.rows]
    elif isinstance(rows_or_matrix, SymMatrix):
        rows = [list(r) for r in rows_or_matrix.entries]
    else:
        rows = [list(r) for r in rows_or_matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    # clear denominators rowwise so Bareiss divisions stay integral
    m = []
    for row in rows:
        den = 1
        for v in row:
            v = Fraction(v)
            den = den * v.denominator // _gcd(den, v.denominator)
        m.append([int(Fraction(v) * den) for v in row])
    nrows = len(m)
    piv_cols: List[int] = []
    prev = 1
    pr = 0
    for pc in range(ncols):
        sel = next((i for i in range(pr, nrows) if m[i][pc] != 0), None)
        if sel is None:
            continue
        m[pr], m[sel] = m[sel], m[pr]
        for i in range(pr + 1, nrows):
            for j in range(pc + 1, ncols):
                num = m[i][j] * m[pr][pc] - m[i][pc] * m[pr][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                m[i][j] = q
            m[i][pc] = 0
        prev = m[pr][pc]
        piv_cols.append(pc)
        pr += 1
        if pr == nrows:
            break
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i in reversed(range(len(piv_cols))):
            pc = piv_cols[i]
            s = sum(
                (Fraction(m[i][j]) * vec[j] for j in range(pc + 1, ncols)),
                Fraction(0),
            )
            vec[pc] = -s / Fraction(m[i][pc])
        basis.append(_primitive_vector(vec))
    return basis


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _primitive_vector(vec) -> Tuple[Fraction, ...]:
    den = 1
    for v in vec:
        den = den * v.denominator // _gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = _gcd(g, abs(v))
    if g == 0:
        return tuple(Fraction(v) for v in ints)
    lead = next((v for v in ints if v != 0), 1)
    if lead < 0:
        g = -g
    return tuple(Fraction(v, g) for v in ints)


def det_poly_matrix(entries: Sequence[Sequence[UniPoly]]) -> UniPoly:
    """Determinant of a small matrix with univariate polynomial entries.

    Subset dynamic programming over columns; exact, no division needed.
    """
    n = len(entries)
    if n == 0:
        return UniPoly([1])
    dp = {0: UniPoly([1])}
    for i in range(n):
        ndp = {}
        for mask, val in dp.items():
            if val.is_zero:
                continue
            sign_flips = 0
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    sign_flips += 1
                    continue
                e = entries[i][j]
                if e.is_zero:
                    continue
                term = val * e
                if sign_flips % 2:
                    term = -term
                key = mask | bit
                ndp[key] = ndp.get(key, UniPoly()) + term
        dp = ndp
    return dp.get((1 << n) - 1, UniPoly())


def charpoly(m: SymMatrix) -> UniPoly:
    """Characteristic polynomial det(z*I - M), monic, exact."""
    n = m.n
    entries = [
        [
            UniPoly([-m[i, j], 1]) if i == j else UniPoly([-m[i, j]])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return det_poly_matrix(entries)


def charpoly_general(rows: Sequence[Sequence[Fraction]]) -> UniPoly:
    """det(z*I - A) for a general square rational matrix."""
    n = len(rows)
    entries = [
        [
            UniPoly([-Fraction(rows[i][j]), 1]) if i == j else UniPoly([-Fraction(rows[i][j])])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return det_poly_matrix(entries)


def inertia_from_charpoly(m: SymMatrix) -> Inertia:
    """Independent oracle: Descartes sign variations of det(tI - M).

    Valid because a symmetric matrix has only real eigenvalues.
    """
    chi = charpoly(m)
    cs = list(chi.coeffs)
    null = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        null += 1
    pos = sign_variations(list(reversed(cs)))
    neg = sign_variations([(-1) ** i * c for i, c in enumerate(reversed(cs))])
    return Inertia(pos, neg, null)


CONE_POS = "p"
CONE_NEG = "-p"
CONE_NONE = "none"


@dataclass(frozen=True)
class WidthResult:
    rank: int
    cone: str  # CONE_POS when p is a sum of powers, CONE_NEG for -p, else CONE_NONE


def width(p: BinaryForm) -> WidthResult:
    """Rank of the catalecticant plus cone membership for p and -p."""
    inert = inertia(catalecticant(p))
    if inert.neg == 0 and inert.pos > 0:
        cone = CONE_POS
    elif inert.pos == 0 and inert.neg > 0:
        cone = CONE_NEG
    else:
        cone = CONE_NONE
    return WidthResult(inert.rank, cone)


def catalecticant_value(p: BinaryForm, t: Sequence[Fraction]) -> Fraction:
    """Evaluate the catalecticant quadratic form at a rational vector.

    Equals the inner product [p, L(t)^2] for L(t) = sum t_i x^(s-i) y^i.
    """
    if p.degree % 2 != 0:
        raise OddDegreeError("even degree required")
    s = p.degree // 2
    if len(t) != s + 1:
        raise DimensionMismatchError(f"need a vector of length {s + 1}")
    t = [Fraction(v) for v in t]
    return sum(p.coeffs[i + j] * t[i] * t[j] for i in range(s + 1) for j in range(s + 1))


def square_linear_combo(t: Sequence[Fraction], s: int) -> BinaryForm:
    """The form L(t)^2 with L = sum t_i x^(s-i) y^i, used as an oracle."""
    raw = [Fraction(0)] * (2 * s + 1)
    for i in range(s + 1):
        for j in range(s + 1):
            raw[i + j] += Fraction(t[i]) * Fraction(t[j])
    return BinaryForm.from_raw(2 * s, raw)
