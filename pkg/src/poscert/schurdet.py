"""Exact verification of the entrywise-determinant expansion.

For a formal power series f(t) = sum_M f_M t^M and vectors u, v of
length N, the determinant Delta(t) = det f[t u v^T] expands as

    V(u) V(v) * sum_{M >= C(N,2)} t^M
        sum_{n_N > ... > n_1 >= 0, sum n_j = M} s_n(u) s_n(v) prod_j f_{n_j},

with V the Vandermonde product prod_{i<j} (u_i - u_j) and s_n the Schur
polynomial evaluated through the bialternant det(x_i^{n_j}) / V(x).
Both sides are computed here independently over exact rationals -- the
left by a determinant in the truncated power-series ring, the right by
enumerating the strictly decreasing exponent tuples -- so each serves
as an oracle for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .polycore import RationalLike, rat


def validate_strict_tuple(tpl: Sequence[int]) -> tuple[int, ...]:
    """A strictly decreasing tuple of nonnegative integers."""
    t = tuple(int(x) for x in tpl)
    if not t:
        raise ValueError("tuple must be nonempty")
    if any(a <= b for a, b in zip(t, t[1:])) or t[-1] < 0:
        raise ValueError(f"tuple must be strictly decreasing and >= 0: {t}")
    return t


@dataclass(frozen=True)
class StrictTuple:
    """Strictly decreasing exponent tuple (n_N, ..., n_1), n_1 >= 0."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", validate_strict_tuple(self.entries))

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def to_partition(self) -> tuple[int, ...]:
        """Subtract the staircase: lambda_j = n_j - (N - j) in decreasing order."""
        n = len(self.entries)
        return tuple(e - (n - 1 - j) for j, e in enumerate(self.entries))


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    # Exact Gaussian elimination with partial pivot-by-first-nonzero.
    n = len(rows)
    rows = [list(r) for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def vandermonde(xs: Sequence[RationalLike]) -> Fraction:
    """V(x) = prod_{i<j} (x_i - x_j)."""
    vals = [rat(x) for x in xs]
    out = Fraction(1)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            out *= vals[i] - vals[j]
    return out


def schur_eval(tpl: Sequence[int], xs: Sequence[RationalLike]) -> Fraction:
    """Schur polynomial via the bialternant det(x_i^{n_j}) / V(x).

    Columns carry the exponents in the given strictly decreasing order;
    the staircase (N-1, ..., 1, 0) evaluates to 1 for any distinct x.
    The division is exact because the numerator is alternating in x.
    """
    if isinstance(tpl, StrictTuple):
        tpl = tpl.entries
    t = validate_strict_tuple(tpl)
    vals = [rat(x) for x in xs]
    if len(vals) != len(t):
        raise ValueError("tuple length must match the number of variables")
    if len(set(vals)) != len(vals):
        raise ValueError("variables must be pairwise distinct")
    num = _det_fraction([[x**e for e in t] for x in vals])
    return num / vandermonde(vals)


@dataclass(frozen=True)
class TruncatedSeries:
    """Element of Q[t]/(t^{cutoff+1}); arithmetic truncates consistently."""

    cutoff: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def make(cutoff: int, coeffs: Sequence[RationalLike] = ()) -> "TruncatedSeries":
        cs = [rat(c) for c in coeffs][: cutoff + 1]
        cs += [Fraction(0)] * (cutoff + 1 - len(cs))
        return TruncatedSeries(cutoff, tuple(cs))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.cutoff == other.cutoff
        return TruncatedSeries(
            self.cutoff, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.cutoff, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.cutoff == other.cutoff
        c = self.cutoff
        out = [Fraction(0)] * (c + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(0, c + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncatedSeries(c, tuple(out))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def _det_series(mat: list[list[TruncatedSeries]], cutoff: int) -> TruncatedSeries:
    # Cofactor expansion along the first row. Truncation at the cutoff is
    # a ring homomorphism, and the cofactor formula is division-free, so
    # this computes the truncated determinant exactly. (The truncated
    # ring has zero divisors, which rules out fraction-free elimination.)
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = TruncatedSeries.make(cutoff)
    for j in range(n):
        a = mat[0][j]
        if a.is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in mat[1:]]
        term = a * _det_series(minor, cutoff)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_series_direct(
    f_coeffs: Sequence[RationalLike],
    u: Sequence[RationalLike],
    v: Sequence[RationalLike],
    cutoff: int,
) -> TruncatedSeries:
    """Left side: det of the N x N matrix of series f(t u_i v_j), exact."""
    uu = [rat(x) for x in u]
    vv = [rat(x) for x in v]
    n = len(uu)
    if len(vv) != n:
        raise ValueError("u and v must have equal length")
    if cutoff < n * (n - 1) // 2:
        raise ValueError("cutoff must be at least binom(N, 2)")
    fs = [rat(c) for c in f_coeffs]
    mat = []
    for ui in uu:
        row = []
        for vj in vv:
            z = ui * vj
            row.append(
                TruncatedSeries.make(
                    cutoff, [fs[m] * z**m if m < len(fs) else 0 for m in range(cutoff + 1)]
                )
            )
        mat.append(row)
    return _det_series(mat, cutoff)


def det_series_formula(
    f_coeffs: Sequence[RationalLike],
    u: Sequence[RationalLike],
    v: Sequence[RationalLike],
    cutoff: int,
) -> TruncatedSeries:
    """Right side: the Vandermonde-weighted Schur-polynomial expansion.

    Strictly decreasing tuples are enumerated as combinations of distinct
    exponents drawn from the support of f (tuples touching a zero
    coefficient contribute nothing), bucketed by weight M <= cutoff.
    """
    uu = [rat(x) for x in u]
    vv = [rat(x) for x in v]
    n = len(uu)
    if len(vv) != n:
        raise ValueError("u and v must have equal length")
    if cutoff < n * (n - 1) // 2:
        raise ValueError("cutoff must be at least binom(N, 2)")
    if len(set(uu)) != n or len(set(vv)) != n:
        raise ValueError("u and v entries must be pairwise distinct")
    fs = [rat(c) for c in f_coeffs]
    support = [m for m in range(min(len(fs), cutoff + 1)) if fs[m] != 0]

    out = [Fraction(0)] * (cutoff + 1)
    for combo in combinations(support, n):
        m = sum(combo)
        if m > cutoff:
            continue
        tpl = tuple(sorted(combo, reverse=True))
        prod_f = Fraction(1)
        for e in tpl:
            prod_f *= fs[e]
        out[m] += schur_eval(tpl, uu) * schur_eval(tpl, vv) * prod_f
    vuv = vandermonde(uu) * vandermonde(vv)
    return TruncatedSeries.make(cutoff, [vuv * c for c in out])
