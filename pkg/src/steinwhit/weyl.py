"""Symmetric group combinatorics for GL(n).

Conventions, fixed here once and relied on by every other module:

* Permutations are stored in one-line notation over ``{1, ..., n}``,
  so ``w(i) == window[i - 1]``.
* Composition is ``(v * w)(i) == v(w(i))`` -- the right factor acts first.
* Roots are ordered index pairs ``(i, j)`` with ``i != j``, positive
  exactly when ``i < j``, and permutations act by
  ``alpha_{i,j} |-> alpha_{w(i), w(j)}``.
* Weights are integer exponent vectors ``kbar``; the pairing with a root
  is ``<alpha_{i,j}, kbar> == kbar[i-1] - kbar[j-1]``.

Dominance here is always dominance *relative to a permutation* ``w``: a
weight lies in the ``w``-cone when every simple-root pairing clears the
threshold 0 (simple root pulled back to a positive root by ``w**-1``) or
-1 (pulled back to a negative root).  Translating the cone by
``dominance_shift(w)`` moves it onto the ordinary dominant cone, which is
what makes the shift worth naming.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

__all__ = [
    "Permutation",
    "Root",
    "Weight",
    "act_on_root",
    "all_permutations",
    "conjugated_shift",
    "descent_suffix_counts",
    "dominance_shift",
    "is_dominant",
    "length",
    "root_pairing",
]

Weight = tuple[int, ...]


class Root(NamedTuple):
    """Ordered index pair (i, j), i != j; positive exactly when i < j.

    >>> Root(1, 3).is_positive
    True
    >>> Root(3, 1).is_positive
    False
    """

    i: int
    j: int

    @property
    def is_positive(self) -> bool:
        return self.i < self.j


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> w = Permutation((2, 3, 1))
    >>> w(1), w(2), w(3)
    (2, 3, 1)
    >>> w.inverse().window
    (3, 1, 2)
    >>> (w * w.inverse()).window
    (1, 2, 3)
    """

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.window)
        if sorted(self.window) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.window}")

    @property
    def n(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition swapping i and i + 1 (1 <= i < n)."""
        if not 1 <= i < n:
            raise ValueError(f"simple reflection index {i} out of range for n={n}")
        window = list(range(1, n + 1))
        window[i - 1], window[i] = window[i], window[i - 1]
        return cls(tuple(window))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The order-reversing permutation n, n-1, ..., 1."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        window = list(range(1, n + 1))
        window[i - 1], window[j - 1] = window[j - 1], window[i - 1]
        return cls(tuple(window))

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition with ``other`` acting first: (self * other)(i) == self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.window[k - 1] for k in other.window))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, val in enumerate(self.window, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions.

        >>> Permutation((2, 3, 1)).length()
        2
        >>> Permutation.longest(4).length()
        6
        """
        win = self.window
        return sum(
            1
            for a in range(len(win))
            for b in range(a + 1, len(win))
            if win[a] > win[b]
        )

    def descents(self) -> tuple[int, ...]:
        """Places i with self(i) > self(i + 1)."""
        win = self.window
        return tuple(i for i in range(1, len(win)) if win[i - 1] > win[i])

    def act_weight(self, kbar: Weight) -> Weight:
        """Permute weight entries: result[self(j)] = kbar[j]."""
        out = [0] * self.n
        for j in range(1, self.n + 1):
            out[self.window[j - 1] - 1] = kbar[j - 1]
        return tuple(out)

    def __repr__(self) -> str:
        return f"Permutation({self.window})"


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations in lexicographic window order (deterministic)."""
    for window in itertools.permutations(range(1, n + 1)):
        yield Permutation(window)


def length(w: Permutation) -> int:
    return w.length()


def act_on_root(w: Permutation, root: Root) -> Root:
    """alpha_{i,j} |-> alpha_{w(i), w(j)}.

    >>> act_on_root(Permutation((2, 3, 1)), Root(1, 2))
    Root(i=2, j=3)
    """
    return Root(w(root.i), w(root.j))


def root_pairing(root: Root, kbar: Weight) -> int:
    """<alpha_{i,j}, kbar> = k_i - k_j."""
    return kbar[root.i - 1] - kbar[root.j - 1]


def is_dominant(kbar: Weight, w: Permutation) -> bool:
    """Whether ``kbar`` lies in the w-dominance cone.

    For each simple root alpha_i = alpha_{i,i+1} the pairing
    ``k_i - k_{i+1}`` must be >= 0 when ``w**-1 . alpha_i`` is positive and
    >= -1 when it is negative.

    >>> is_dominant((0, 0), Permutation.identity(2))
    True
    >>> is_dominant((-1, 0), Permutation.simple(2, 1))
    True
    >>> is_dominant((-2, 0), Permutation.simple(2, 1))
    False
    """
    n = w.n
    if len(kbar) != n:
        raise ValueError("weight length mismatch")
    winv = w.inverse()
    for i in range(1, n):
        threshold = 0 if winv(i) < winv(i + 1) else -1
        if kbar[i - 1] - kbar[i] < threshold:
            return False
    return True


def descent_suffix_counts(w: Permutation) -> Weight:
    """Entry i counts descents of ``w**-1`` at places >= i (entry n is 0).

    >>> descent_suffix_counts(Permutation.simple(3, 1))
    (1, 0, 0)
    >>> descent_suffix_counts(Permutation.longest(3))
    (2, 1, 0)
    """
    n = w.n
    desc = set(w.inverse().descents())
    counts = [0] * n
    for i in range(n - 1, 0, -1):
        counts[i - 1] = counts[i] + (1 if i in desc else 0)
    return tuple(counts)


def dominance_shift(w: Permutation) -> Weight:
    """Negated descent suffix counts; the vertex of the w-dominance cone.

    ``kbar`` is w-dominant exactly when ``kbar - dominance_shift(w)`` is
    weakly decreasing, and the difference condition pins the shift:
    consecutive entries differ by 0 over an ascent of ``w**-1`` and by -1
    over a descent, with last entry 0.

    >>> dominance_shift(Permutation.simple(2, 1))
    (-1, 0)
    >>> dominance_shift(Permutation.longest(4))
    (-3, -2, -1, 0)
    """
    shift = tuple(-c for c in descent_suffix_counts(w))
    # Independent construction from the difference condition, as a guard.
    n = w.n
    winv = w.inverse()
    alt = [0] * n
    for i in range(n - 1, 0, -1):
        step = 0 if winv(i) < winv(i + 1) else -1
        alt[i - 1] = alt[i] + step
    assert tuple(alt) == shift, (w, shift, tuple(alt))
    return shift


def conjugated_shift(w: Permutation) -> tuple[Weight, int]:
    """Weight of w0.shift(w).w0.shift(w0) and the central exponent z.

    Conjugating a diagonal weight by the longest element reverses it;
    multiplying diagonals adds exponents.  The returned weight differs
    from ``dominance_shift(w0 * w)`` by ``z`` in every entry, and that
    constancy is asserted here.

    >>> conjugated_shift(Permutation.identity(2))
    ((-1, 0), 0)
    >>> conjugated_shift(Permutation.longest(2))
    ((-1, -1), 1)
    """
    n = w.n
    w0 = Permutation.longest(n)
    shift_w = dominance_shift(w)
    shift_w0 = dominance_shift(w0)
    weight = tuple(shift_w[n - i] + shift_w0[i - 1] for i in range(1, n + 1))
    target = dominance_shift(w0 * w)
    diffs = {target[i] - weight[i] for i in range(n)}
    assert len(diffs) == 1, (w, weight, target)
    return weight, diffs.pop()


if __name__ == "__main__":
    import doctest

    doctest.testmod()
