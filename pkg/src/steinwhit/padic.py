"""Exact p-adic scalars, matrices, and Iwahori cell decomposition.

Everything is a rational number viewed inside Q_p: a `Fraction` plus a
prime.  No completions, no floats.  The three decompositions provided:

* ``iwasawa``: g = b k with b upper triangular and k in K = GL_n(Z_p)
  (integral entries, unit determinant), by column operations over Z_p.
* ``residue_bruhat``: an invertible matrix over F_p equals b1 P_w b2 with
  b1, b2 upper triangular, by row/column clearing from a bottom-most
  pivot per column.
* ``iwahori_cell``: g = n . diag(p^kbar) . t0 . P_w . j with n upper
  unitriangular over Q, t0 diagonal with unit entries, and j in the
  Iwahori subgroup J (integral, upper triangular and invertible mod p).
  The pair (kbar, w) labels the cell of g uniquely; the other factors
  are witnesses and the product is asserted to reconstruct g exactly.

Lifts from F_p to Z always use the representatives {0, ..., p-1}.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .weyl import Permutation

__all__ = [
    "Cell",
    "MatrixFormatError",
    "PAdicMatrix",
    "PAdicScalar",
    "SingularMatrixError",
    "cell_label",
    "frac_mod_p",
    "frac_psi_phase",
    "frac_valuation",
    "iwahori_cell",
    "iwasawa",
    "matrix_from_json",
    "matrix_to_json",
    "psi_phase",
    "residue_bruhat",
    "valuation",
]

INFINITE = math.inf


class SingularMatrixError(ValueError):
    """The matrix is not invertible over Q."""


class MatrixFormatError(ValueError):
    """A serialized matrix does not match the expected JSON shape."""


def _int_valuation(a: int, p: int) -> int:
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def frac_valuation(x: Fraction, p: int) -> Union[int, float]:
    """p-adic valuation of a rational; +infinity for 0."""
    if x == 0:
        return INFINITE
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def frac_psi_phase(x: Fraction, p: int) -> Fraction:
    """Phase of the standard additive character at x, as a rational mod 1.

    The character sends x to exp(2 pi i . phase) where phase is the p-adic
    fractional part: 0 when v(x) >= 0, otherwise (c d^{-1} mod p^m) / p^m
    for x = c / (d p^m) with c, d prime to p.
    """
    if x == 0:
        return Fraction(0)
    v = frac_valuation(x, p)
    if v >= 0:
        return Fraction(0)
    m = -int(v)
    pm = p**m
    # x is in lowest terms, so its denominator is exactly d * p^m with d prime to p.
    d = x.denominator // pm
    r = (x.numerator * pow(d, -1, pm)) % pm
    return Fraction(r, pm)


def frac_mod_p(x: Fraction, p: int) -> int:
    """Reduce a p-integral rational mod p into {0, ..., p-1}."""
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not p-integral at p={p}")
    return (x.numerator * pow(x.denominator, -1, p)) % p


@dataclass(frozen=True)
class PAdicScalar:
    """A rational viewed in Q_p: exact value plus the prime."""

    value: Fraction
    prime: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))

    def valuation(self) -> Union[int, float]:
        return frac_valuation(self.value, self.prime)

    def psi_phase(self) -> Fraction:
        return frac_psi_phase(self.value, self.prime)

    def __add__(self, other: "PAdicScalar") -> "PAdicScalar":
        assert self.prime == other.prime
        return PAdicScalar(self.value + other.value, self.prime)

    def __mul__(self, other: "PAdicScalar") -> "PAdicScalar":
        assert self.prime == other.prime
        return PAdicScalar(self.value * other.value, self.prime)


def valuation(x: PAdicScalar) -> Union[int, float]:
    return x.valuation()


def psi_phase(x: PAdicScalar) -> Fraction:
    return x.psi_phase()


_Rows = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class PAdicMatrix:
    """Square matrix of exact rationals sharing one prime."""

    p: int
    entries: _Rows

    def __post_init__(self) -> None:
        n = len(self.entries)
        rows = tuple(tuple(Fraction(e) for e in row) for row in self.entries)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, p: int, rows) -> "PAdicMatrix":
        return cls(p, tuple(tuple(Fraction(e) for e in row) for row in rows))

    @classmethod
    def identity(cls, n: int, p: int) -> "PAdicMatrix":
        return cls.from_rows(
            p, [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def diagonal(cls, p: int, diag) -> "PAdicMatrix":
        n = len(diag)
        return cls.from_rows(
            p, [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def weight_matrix(cls, p: int, kbar) -> "PAdicMatrix":
        """diag(p^{k_1}, ..., p^{k_n})."""
        return cls.diagonal(p, [Fraction(p) ** k for k in kbar])

    @classmethod
    def permutation(cls, p: int, w: Permutation) -> "PAdicMatrix":
        """Column j carries a 1 in row w(j)."""
        n = w.n
        return cls.from_rows(
            p, [[1 if i == w(j) else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]
        )

    @classmethod
    def one_param(cls, p: int, n: int, i: int, j: int, t) -> "PAdicMatrix":
        """I + t e_{i,j} for i != j (1-indexed)."""
        if i == j:
            raise ValueError("off-diagonal position required")
        rows = [[Fraction(1) if a == b else Fraction(0) for b in range(n)] for a in range(n)]
        rows[i - 1][j - 1] = Fraction(t)
        return cls.from_rows(p, rows)

    def __mul__(self, other: "PAdicMatrix") -> "PAdicMatrix":
        if self.p != other.p or self.n != other.n:
            raise ValueError("matrix context mismatch")
        a, b = self.entries, other.entries
        n = self.n
        bt = tuple(zip(*b))
        return PAdicMatrix(
            self.p,
            tuple(
                tuple(sum(ra[k] * cb[k] for k in range(n)) for cb in bt) for ra in a
            ),
        )

    def scale(self, c) -> "PAdicMatrix":
        c = Fraction(c)
        return PAdicMatrix(
            self.p, tuple(tuple(c * e for e in row) for row in self.entries)
        )

    def det(self) -> Fraction:
        n = self.n
        rows = [list(row) for row in self.entries]
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            det *= rows[col][col]
            inv = 1 / rows[col][col]
            for r in range(col + 1, n):
                if rows[r][col] != 0:
                    factor = rows[r][col] * inv
                    rows[r] = [rows[r][k] - factor * rows[col][k] for k in range(n)]
        return det

    def inverse(self) -> "PAdicMatrix":
        n = self.n
        work = [list(row) + [Fraction(int(i == j)) for j in range(n)]
                for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = 1 / work[col][col]
            work[col] = [e * inv for e in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [work[r][k] - factor * work[col][k] for k in range(2 * n)]
        return PAdicMatrix.from_rows(self.p, [row[n:] for row in work])

    def reduce_mod_p(self) -> list[list[int]]:
        return [[frac_mod_p(e, self.p) for e in row] for row in self.entries]

    def is_integral(self) -> bool:
        return all(e.denominator % self.p != 0 for row in self.entries for e in row)

    def is_in_k(self) -> bool:
        """Integral with unit determinant: an element of GL_n(Z_p)."""
        return self.is_integral() and frac_valuation(self.det(), self.p) == 0

    def is_in_iwahori(self) -> bool:
        """In K and upper triangular invertible mod p."""
        if not self.is_in_k():
            return False
        for i in range(self.n):
            if frac_valuation(self.entries[i][i], self.p) != 0:
                return False
            for j in range(i):
                if frac_valuation(self.entries[i][j], self.p) < 1:
                    return False
        return True

    def is_upper_triangular(self) -> bool:
        return all(
            self.entries[i][j] == 0 for i in range(self.n) for j in range(i)
        )

    def is_upper_unitriangular(self) -> bool:
        return self.is_upper_triangular() and all(
            self.entries[i][i] == 1 for i in range(self.n)
        )

    def diagonal_entries(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e) for e in row) for row in self.entries
        )
        return f"PAdicMatrix(p={self.p}, [{body}])"


def matrix_to_json(m: PAdicMatrix) -> str:
    doc = {
        "p": m.p,
        "entries": [[str(e) for e in row] for row in m.entries],
    }
    return json.dumps(doc, sort_keys=True)


def matrix_from_json(doc) -> PAdicMatrix:
    """Parse {"p": prime, "entries": [["a/b", ...], ...]} (dict or JSON text)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) - {"p", "entries"} or "p" not in doc or "entries" not in doc:
        raise MatrixFormatError("expected an object with fields 'p' and 'entries'")
    p = doc["p"]
    if not isinstance(p, int) or p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise MatrixFormatError(f"'p' must be a prime integer, got {p!r}")
    entries = doc["entries"]
    if not isinstance(entries, list) or not entries:
        raise MatrixFormatError("'entries' must be a non-empty list of rows")
    n = len(entries)
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFormatError("'entries' must be a square array of rationals")
        parsed = []
        for e in row:
            if isinstance(e, bool) or not isinstance(e, (str, int)):
                raise MatrixFormatError(f"bad rational entry {e!r}")
            try:
                parsed.append(Fraction(e))
            except (ValueError, ZeroDivisionError) as exc:
                raise MatrixFormatError(f"bad rational entry {e!r}") from exc
        rows.append(parsed)
    return PAdicMatrix.from_rows(p, rows)


def iwasawa(g: PAdicMatrix, check: bool = True) -> tuple[PAdicMatrix, PAdicMatrix]:
    """g = b k with b upper triangular over Q and k in GL_n(Z_p).

    Works rows n..1; in each row the pivot among the not-yet-fixed columns
    is an entry of minimal valuation (ties to the smallest column index).
    All column operations are right multiplications by elements of K.
    With ``check`` the factors are re-multiplied and compared to g.
    """
    n, p = g.n, g.p
    a = [list(row) for row in g.entries]
    k = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    # Invariant: g == (current a) * (current k); ops update both.
    for i in range(n - 1, -1, -1):
        best = None
        best_v = None
        for j in range(i + 1):
            if a[i][j] == 0:
                continue
            v = frac_valuation(a[i][j], p)
            if best_v is None or v < best_v:
                best, best_v = j, v
        if best is None:
            raise SingularMatrixError("matrix is singular")
        if best != i:
            for row in a:
                row[best], row[i] = row[i], row[best]
            k[best], k[i] = k[i], k[best]
        pivot = a[i][i]
        unit = pivot / Fraction(p) ** best_v
        inv_unit = 1 / unit
        for row in a:
            row[i] *= inv_unit
        k[i] = [unit * e for e in k[i]]
        piv = a[i][i]
        for j in range(i):
            if a[i][j] != 0:
                c = a[i][j] / piv
                for row in a:
                    row[j] -= c * row[i]
                k[i] = [k[i][col] + c * k[j][col] for col in range(n)]
    b = PAdicMatrix.from_rows(p, a)
    kmat = PAdicMatrix.from_rows(p, k)
    assert b.is_upper_triangular()
    if check:
        assert kmat.is_in_k(), kmat
        assert b * kmat == g
    return b, kmat


def residue_bruhat(rows: list[list[int]], p: int) -> tuple[Permutation, list[list[int]], list[list[int]]]:
    """m = b1 P_w b2 over F_p with b1, b2 upper triangular.

    Columns are processed left to right; the pivot is the bottom-most
    nonzero entry in a not-yet-pivoted row.  Raises SingularMatrixError
    when no pivot exists.
    """
    n = len(rows)
    a = [[e % p for e in row] for row in rows]
    b1 = [[int(i == j) for j in range(n)] for i in range(n)]
    b2 = [[int(i == j) for j in range(n)] for i in range(n)]
    assigned = [False] * n
    w_of_col = [0] * n
    for j in range(n):
        r = next((x for x in range(n - 1, -1, -1) if not assigned[x] and a[x][j] % p), None)
        if r is None:
            raise SingularMatrixError("matrix is singular mod p")
        assigned[r] = True
        w_of_col[j] = r + 1
        val = a[r][j] % p
        inv = pow(val, -1, p)
        # Scale row r so the pivot is 1; b1 gets column r scaled by the old pivot.
        a[r] = [(e * inv) % p for e in a[r]]
        for x in range(n):
            b1[x][r] = (b1[x][r] * val) % p
        # Clear upward in column j: row x -= c * row r for x < r.
        for x in range(r):
            c = a[x][j] % p
            if c:
                a[x] = [(a[x][t] - c * a[r][t]) % p for t in range(n)]
                for y in range(n):
                    b1[y][r] = (b1[y][r] + c * b1[y][x]) % p
        # Clear rightward in row r: col t -= c * col j for t > j.
        for t in range(j + 1, n):
            c = a[r][t] % p
            if c:
                for x in range(n):
                    a[x][t] = (a[x][t] - c * a[x][j]) % p
                b2[j] = [(b2[j][y] + c * b2[t][y]) % p for y in range(n)]
    w = Permutation(tuple(w_of_col))
    for i in range(n):
        for j in range(n):
            expected = 1 if i + 1 == w(j + 1) else 0
            assert a[i][j] == expected, "reduction did not reach a permutation matrix"
    return w, b1, b2


@dataclass(frozen=True)
class Cell:
    """Label and witnesses for g = n . diag(p^kbar) . t0 . P_w . j."""

    kbar: tuple[int, ...]
    w: Permutation
    n_factor: PAdicMatrix
    t0_factor: PAdicMatrix
    j_factor: PAdicMatrix

    def reconstruct(self) -> PAdicMatrix:
        p = self.n_factor.p
        return (
            self.n_factor
            * PAdicMatrix.weight_matrix(p, self.kbar)
            * self.t0_factor
            * PAdicMatrix.permutation(p, self.w)
            * self.j_factor
        )


def iwahori_cell(g: PAdicMatrix, check: bool = True) -> Cell:
    """Decompose g into its Iwahori cell with exact witnesses.

    The combined steps: iwasawa g = b k; split b into a unipotent part
    and a diagonal; Bruhat-reduce k mod p and lift; push the leftover
    triangular lift through the diagonal.  (kbar, w) is the unique cell
    label; witnesses are asserted to live in their subgroups and, when
    ``check`` is set, to reconstruct g entry for entry.
    """
    n, p = g.n, g.p
    b, k = iwasawa(g, check=check)
    diag = b.diagonal_entries()
    kbar = tuple(int(frac_valuation(d, p)) for d in diag)
    unit_diag = tuple(d / Fraction(p) ** kv for d, kv in zip(diag, kbar))
    n_b = PAdicMatrix.from_rows(
        p,
        [
            [b.entries[i][j] / diag[j] for j in range(n)]
            for i in range(n)
        ],
    )
    w, b1_res, _ = residue_bruhat(k.reduce_mod_p(), p)
    b1 = PAdicMatrix.from_rows(p, b1_res)  # naive lift, entries in {0..p-1}
    j_factor = PAdicMatrix.permutation(p, w.inverse()) * b1.inverse() * k
    t01 = b1.diagonal_entries()
    # Push d = p^kbar t0 through the unitriangular part of b1:
    # d n1 d^{-1} scales entry (i, j) by d_i / d_j.
    n2 = PAdicMatrix.from_rows(
        p,
        [
            [
                (b1.entries[i][j] / t01[j]) * (diag[i] / diag[j])
                for j in range(n)
            ]
            for i in range(n)
        ],
    )
    n_total = n_b * n2
    t0_total = PAdicMatrix.diagonal(p, tuple(u * t for u, t in zip(unit_diag, t01)))
    cell = Cell(kbar, w, n_total, t0_total, j_factor)
    assert n_total.is_upper_unitriangular()
    assert all(frac_valuation(t, p) == 0 for t in t0_total.diagonal_entries())
    if check:
        assert j_factor.is_in_iwahori(), j_factor
        assert cell.reconstruct() == g
    return cell


def cell_label(g: PAdicMatrix) -> tuple[tuple[int, ...], Permutation]:
    """The (kbar, w) label of the cell of g, without witness factors.

    Fast path for sweeps that compare labels only; agrees with
    ``iwahori_cell(g).kbar`` and ``.w`` by construction (both read the
    label off the same two reductions).
    """
    b, k = iwasawa(g, check=False)
    kbar = tuple(int(frac_valuation(d, g.p)) for d in b.diagonal_entries())
    w, _, _ = residue_bruhat(k.reduce_mod_p(), g.p)
    return kbar, w
