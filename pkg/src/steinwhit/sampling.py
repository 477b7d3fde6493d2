"""Deterministic random matrices for verification sampling.

All generators take an explicit ``random.Random`` so that a fixed seed
reproduces the exact same matrices across runs and platforms.  Sampled
group elements are built as structured products

    upper-unipotent . torus . permutation . Iwahori,

which keeps the true cell label (kbar, w) known by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .padic import PAdicMatrix
from .weyl import Permutation, Weight

__all__ = [
    "random_cell_product",
    "random_group_element",
    "random_iwahori",
    "random_permutation",
    "random_torus_units",
    "random_upper_unipotent",
    "random_weight",
]


def random_permutation(rng: random.Random, n: int) -> Permutation:
    window = list(range(1, n + 1))
    rng.shuffle(window)
    return Permutation(tuple(window))


def random_weight(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> Weight:
    return tuple(rng.randint(lo, hi) for _ in range(n))


def _random_unit(rng: random.Random, p: int) -> Fraction:
    """A random p-adic unit with small numerator and denominator."""
    while True:
        a = rng.randint(1, p * p)
        if a % p:
            break
    while True:
        b = rng.randint(1, p * p)
        if b % p:
            break
    sign = -1 if rng.random() < 0.5 else 1
    return Fraction(sign * a, b)


def random_upper_unipotent(rng: random.Random, n: int, p: int, depth: int = 2) -> PAdicMatrix:
    """Upper unitriangular matrix whose entries may have p-power denominators."""
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            den = p ** rng.randint(0, depth)
            num = rng.randint(-(p**depth), p**depth)
            rows[i][j] = Fraction(num, den)
    return PAdicMatrix.from_rows(p, rows)


def random_torus_units(rng: random.Random, n: int, p: int) -> PAdicMatrix:
    return PAdicMatrix.diagonal(p, [_random_unit(rng, p) for _ in range(n)])


def random_iwahori(rng: random.Random, n: int, p: int) -> PAdicMatrix:
    """Random element of the Iwahori subgroup, as N_O . T_O . N^-_pO."""
    upper = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            upper[i][j] = Fraction(rng.randint(-(p**2), p**2))
            lower[j][i] = Fraction(p * rng.randint(-p, p))
    out = (
        PAdicMatrix.from_rows(p, upper)
        * random_torus_units(rng, n, p)
        * PAdicMatrix.from_rows(p, lower)
    )
    assert out.is_in_iwahori()
    return out


def random_cell_product(
    rng: random.Random,
    n: int,
    p: int,
    weight_range: int = 2,
) -> tuple[PAdicMatrix, Weight, Permutation]:
    """A structured product together with its cell label.

    Returns (g, kbar, w) with g = upper . units . diag(p^kbar) . P_w . j;
    the cell decomposition of g must recover exactly this (kbar, w).
    """
    kbar = random_weight(rng, n, -weight_range, weight_range)
    w = random_permutation(rng, n)
    g = (
        random_upper_unipotent(rng, n, p)
        * random_torus_units(rng, n, p)
        * PAdicMatrix.weight_matrix(p, kbar)
        * PAdicMatrix.permutation(p, w)
        * random_iwahori(rng, n, p)
    )
    return g, kbar, w


def random_group_element(rng: random.Random, n: int, p: int, weight_range: int = 2) -> PAdicMatrix:
    return random_cell_product(rng, n, p, weight_range)[0]
