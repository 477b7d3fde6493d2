"""Extended affine Weyl group of GL(n): Z^n semidirect S_n.

An element is a pair (lam, w) acting as the matrix diag(p^lam) P_w, and
the group law matches matrix multiplication of those realizations:

    (lam, w) (mu, v) = (lam + w.mu, w v),   (w.mu)_i = mu_{w^{-1}(i)}.

Generators: the simple reflections s_1, ..., s_{n-1} of S_n, the affine
reflection s_0 = ((-1, 0, ..., 0, 1), (1 n)), and the rotation element
r = ((0, ..., 0, 1), (n, 1, 2, ..., n-1)) of length zero, whose n-th
power is the central translation by (1, ..., 1).  Conjugation cycles the
reflections: r^{-1} s_i r = s_{(i+1) mod n}.

>>> u = ExtAffineElement.rotation(3)
>>> s = ExtAffineElement.simple_reflection
>>> all(u.inverse() * s(3, i) * u == s(3, (i + 1) % 3) for i in range(3))
True
>>> u**3 == ExtAffineElement.translation((1, 1, 1))
True
>>> length_ext(u), length_ext(s(3, 0)), length_ext(ExtAffineElement.translation((1, 0, 0)))
(0, 1, 2)

Length is computed by breadth-first search over the subgroup with
coordinate sum zero (generated by s_0, ..., s_{n-1}), after stripping
the rotation power; ``length_formula`` is a closed form cross-checked
against the search in the test suite.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .padic import PAdicMatrix
from .weyl import Permutation, Weight

__all__ = [
    "ExtAffineElement",
    "length_ext",
    "length_formula",
    "realize",
    "reduced_word",
]

_BFS_NODE_CAP = 2_000_000


@dataclass(frozen=True)
class ExtAffineElement:
    """Pair (lam, w) in Z^n semidirect S_n."""

    lam: tuple[int, ...]
    w: Permutation

    def __post_init__(self) -> None:
        lam = tuple(int(c) for c in self.lam)
        if len(lam) != self.w.n:
            raise ValueError("translation part and permutation sizes differ")
        object.__setattr__(self, "lam", lam)

    @property
    def n(self) -> int:
        return self.w.n

    @classmethod
    def identity(cls, n: int) -> "ExtAffineElement":
        return cls((0,) * n, Permutation.identity(n))

    @classmethod
    def translation(cls, kbar: Weight) -> "ExtAffineElement":
        return cls(tuple(kbar), Permutation.identity(len(kbar)))

    @classmethod
    def from_permutation(cls, w: Permutation) -> "ExtAffineElement":
        return cls((0,) * w.n, w)

    @classmethod
    def simple_reflection(cls, n: int, i: int) -> "ExtAffineElement":
        """s_i for i in Z/n: s_0 is the affine reflection."""
        i %= n
        if i > 0:
            return cls((0,) * n, Permutation.simple(n, i))
        lam = (-1,) + (0,) * (n - 2) + (1,)
        return cls(lam, Permutation.transposition(n, 1, n))

    @classmethod
    def rotation(cls, n: int) -> "ExtAffineElement":
        window = (n,) + tuple(range(1, n))
        return cls((0,) * (n - 1) + (1,), Permutation(window))

    def __mul__(self, other: "ExtAffineElement") -> "ExtAffineElement":
        if self.n != other.n:
            raise ValueError("sizes differ")
        moved = self.w.act_weight(other.lam)
        lam = tuple(a + b for a, b in zip(self.lam, moved))
        return ExtAffineElement(lam, self.w * other.w)

    def inverse(self) -> "ExtAffineElement":
        winv = self.w.inverse()
        lam = tuple(-c for c in winv.act_weight(self.lam))
        return ExtAffineElement(lam, winv)

    def __pow__(self, k: int) -> "ExtAffineElement":
        base = self if k >= 0 else self.inverse()
        out = ExtAffineElement.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def rotation_exponent(self) -> int:
        """Coordinate sum; the power of the rotation element this carries."""
        return sum(self.lam)

    def normalize_central(self) -> tuple["ExtAffineElement", int]:
        """Split off the central translation making the last coordinate 0.

        Returns (y, m) with self == y * translation((m, ..., m)).
        """
        m = self.lam[-1]
        lam = tuple(c - m for c in self.lam)
        return ExtAffineElement(lam, self.w), m

    def __repr__(self) -> str:
        return f"ExtAffineElement({self.lam}, {self.w.window})"


def realize(x: ExtAffineElement, p: int) -> PAdicMatrix:
    """The matrix diag(p^lam) P_w."""
    return PAdicMatrix.weight_matrix(p, x.lam) * PAdicMatrix.permutation(p, x.w)


class _LengthTable:
    """Breadth-first ball around the identity, with parent pointers."""

    def __init__(self, n: int) -> None:
        self.n = n
        ident = ExtAffineElement.identity(n)
        self.info: dict[ExtAffineElement, tuple[int, ExtAffineElement | None, int | None]]
        self.info = {ident: (0, None, None)}
        self.frontier = [ident]
        self.gens = [ExtAffineElement.simple_reflection(n, i) for i in range(n)]

    def lookup(self, y: ExtAffineElement) -> tuple[int, ExtAffineElement | None, int | None]:
        while y not in self.info:
            if len(self.info) > _BFS_NODE_CAP:
                raise RuntimeError(f"length search ball exceeded {_BFS_NODE_CAP} nodes")
            self._expand_layer()
        return self.info[y]

    def _expand_layer(self) -> None:
        new = []
        for x in self.frontier:
            lx = self.info[x][0]
            for i, s in enumerate(self.gens):
                z = x * s
                if z not in self.info:
                    self.info[z] = (lx + 1, x, i)
                    new.append(z)
        self.frontier = new


_tables: dict[int, _LengthTable] = {}
_tables_lock = threading.Lock()


def _table(n: int) -> _LengthTable:
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            table = _tables[n] = _LengthTable(n)
        return table


def length_ext(x: ExtAffineElement) -> int:
    """Word length in the generators s_0, ..., s_{n-1}.

    The rotation part contributes nothing, so the search runs in the
    coordinate-sum-zero subgroup.
    """
    m = x.rotation_exponent()
    y = x * ExtAffineElement.rotation(x.n) ** (-m)
    return _table(x.n).lookup(y)[0]


def reduced_word(x: ExtAffineElement) -> tuple[tuple[int, ...], int]:
    """Indices (i_1, ..., i_k) and rotation power m with
    x == s_{i_1} ... s_{i_k} * rotation^m and k == length_ext(x)."""
    m = x.rotation_exponent()
    y = x * ExtAffineElement.rotation(x.n) ** (-m)
    table = _table(x.n)
    table.lookup(y)
    word: list[int] = []
    while True:
        _, parent, gen = table.info[y]
        if parent is None:
            break
        word.append(gen)
        y = parent
    return tuple(reversed(word)), m


def length_formula(x: ExtAffineElement) -> int:
    """Closed form: sum over pairs i < j of
    ``abs(lam_i - lam_j + (1 if w^{-1}(i) > w^{-1}(j) else 0))``."""
    n = x.n
    winv = x.w.inverse()
    total = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total += abs(x.lam[i - 1] - x.lam[j - 1] + (1 if winv(i) > winv(j) else 0))
    return total
