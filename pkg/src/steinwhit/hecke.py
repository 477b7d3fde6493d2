"""Iwahori-Hecke algebra of GL(n) in the standard basis.

Elements are finite sums sum_x c_x T_x over extended affine Weyl group
elements x, with coefficients in the ring of Laurent polynomials in a
formal q over Z[eps]/(eps^n - 1).  Multiplication follows the length
rules

    T_x T_{s_i} = T_{x s_i}                     if len(x s_i) > len(x),
    T_x T_{s_i} = q T_{x s_i} + (q - 1) T_x     otherwise,

and T_x T_r = T_{x r} for the length-zero rotation generator r.  The
defining relations (quadratic, braid, commuting, rotation conjugation
T_{s_i} T_r = T_r T_{s_{(i+1) mod n}}, and the n-th rotation power
being the central translation) are re-derived from these rules by
``verify_presentation``.

The one-dimensional character of the Steinberg quotient sends every
T_{s_i} to -1 and T_r to (-1)^{n-1} eps^e; ``steinberg_character``
evaluates it on basis elements and ``character_of`` extends linearly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .affine_weyl import ExtAffineElement, length_ext, reduced_word
from .reporting import CheckResult
from .values import PhaseSum

__all__ = [
    "HeckeElement",
    "HeckeScalar",
    "character_of",
    "equal_mod_center",
    "mult_generator",
    "mult_rotation",
    "multiply",
    "steinberg_character",
    "verify_presentation",
]


class HeckeScalar:
    """Laurent polynomial in q over Z[eps]/(eps^n - 1).

    Terms map (q_exponent, eps_exponent mod n) to an integer.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, int], int] | None = None):
        self.n = n
        self._terms: dict[tuple[int, int], int] = {}
        if terms:
            for (qe, ee), c in terms.items():
                self._add(qe, ee, c)

    def _add(self, q_exp: int, eps_exp: int, coeff: int) -> None:
        if coeff == 0:
            return
        key = (q_exp, eps_exp % self.n)
        new = self._terms.get(key, 0) + coeff
        if new == 0:
            self._terms.pop(key, None)
        else:
            self._terms[key] = new

    @classmethod
    def zero(cls, n: int) -> "HeckeScalar":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "HeckeScalar":
        return cls(n, {(0, 0): 1})

    @classmethod
    def monomial(cls, n: int, coeff: int = 1, q_exp: int = 0, eps_exp: int = 0) -> "HeckeScalar":
        return cls(n, {(q_exp, eps_exp): coeff})

    @classmethod
    def q(cls, n: int) -> "HeckeScalar":
        return cls(n, {(1, 0): 1})

    @classmethod
    def q_minus_one(cls, n: int) -> "HeckeScalar":
        return cls(n, {(1, 0): 1, (0, 0): -1})

    def _check(self, other: "HeckeScalar") -> None:
        if self.n != other.n:
            raise ValueError("coefficient context mismatch")

    def __add__(self, other: "HeckeScalar") -> "HeckeScalar":
        self._check(other)
        out = HeckeScalar(self.n, self._terms)
        for (qe, ee), c in other._terms.items():
            out._add(qe, ee, c)
        return out

    def __neg__(self) -> "HeckeScalar":
        return HeckeScalar(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "HeckeScalar") -> "HeckeScalar":
        return self + (-other)

    def __mul__(self, other: "HeckeScalar") -> "HeckeScalar":
        self._check(other)
        out = HeckeScalar(self.n)
        for (q1, e1), c1 in self._terms.items():
            for (q2, e2), c2 in other._terms.items():
                out._add(q1 + q2, e1 + e2, c1 * c2)
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeScalar):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        raise TypeError("HeckeScalar is unhashable")

    def specialize(self, p: int) -> PhaseSum:
        """Evaluate q at the prime p, keeping eps formal (phase-free)."""
        out = PhaseSum.zero(self.n, p)
        for (qe, ee), c in self._terms.items():
            out = out + PhaseSum.monomial(self.n, p, Fraction(c) * Fraction(p) ** qe, ee)
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return "HeckeScalar(0)"
        bits = []
        for (qe, ee), c in sorted(self._terms.items()):
            part = str(c)
            if qe:
                part += f"*q^{qe}"
            if ee:
                part += f"*eps^{ee}"
            bits.append(part)
        return f"HeckeScalar({' + '.join(bits)})"


class HeckeElement:
    """Finite linear combination of basis elements T_x."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[ExtAffineElement, HeckeScalar] | None = None):
        self.n = n
        self._terms: dict[ExtAffineElement, HeckeScalar] = {}
        if terms:
            for x, c in terms.items():
                self._add(x, c)

    def _add(self, x: ExtAffineElement, coeff: HeckeScalar) -> None:
        if coeff.is_zero():
            return
        if x in self._terms:
            new = self._terms[x] + coeff
            if new.is_zero():
                del self._terms[x]
            else:
                self._terms[x] = new
        else:
            self._terms[x] = coeff

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls(n)

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls.basis(ExtAffineElement.identity(n))

    @classmethod
    def basis(cls, x: ExtAffineElement) -> "HeckeElement":
        return cls(x.n, {x: HeckeScalar.one(x.n)})

    @classmethod
    def generator(cls, n: int, i: int) -> "HeckeElement":
        return cls.basis(ExtAffineElement.simple_reflection(n, i))

    @classmethod
    def rotation_term(cls, n: int) -> "HeckeElement":
        return cls.basis(ExtAffineElement.rotation(n))

    def terms(self) -> list[tuple[ExtAffineElement, HeckeScalar]]:
        return list(self._terms.items())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("size mismatch")
        out = HeckeElement(self.n, self._terms)
        for x, c in other._terms.items():
            out._add(x, c)
        return out

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, {x: -c for x, c in self._terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scaled(self, c: HeckeScalar) -> "HeckeElement":
        return HeckeElement(self.n, {x: c * v for x, v in self._terms.items()})

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        raise TypeError("HeckeElement is unhashable")

    def __repr__(self) -> str:
        if not self._terms:
            return "HeckeElement(0)"
        bits = [f"({c!r})*T{x.lam}{x.w.window}" for x, c in self._terms.items()]
        return " + ".join(bits)


def mult_generator(h: HeckeElement, i: int) -> HeckeElement:
    """Right-multiply by T_{s_i} (i taken mod n, 0 is the affine one)."""
    n = h.n
    s = ExtAffineElement.simple_reflection(n, i)
    q = HeckeScalar.q(n)
    q1 = HeckeScalar.q_minus_one(n)
    out = HeckeElement.zero(n)
    for x, c in h._terms.items():
        xs = x * s
        if length_ext(xs) > length_ext(x):
            out._add(xs, c)
        else:
            out._add(xs, c * q)
            out._add(x, c * q1)
    return out


def mult_rotation(h: HeckeElement, side: str = "right", inverse: bool = False) -> HeckeElement:
    """Multiply by the (invertible, length-zero) rotation basis element.

    A pure relabeling of indices: no q-corrections occur.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = h.n
    r = ExtAffineElement.rotation(n)
    if inverse:
        r = r.inverse()
    out = HeckeElement.zero(n)
    for x, c in h._terms.items():
        out._add(x * r if side == "right" else r * x, c)
    return out


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the algebra, via reduced words for the right factor."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    out = HeckeElement.zero(a.n)
    for y, c in b._terms.items():
        word, m = reduced_word(y)
        acc = a
        for i in word:
            acc = mult_generator(acc, i)
        for _ in range(abs(m)):
            acc = mult_rotation(acc, inverse=m < 0)
        out = out + acc.scaled(c)
    return out


def steinberg_character(x: ExtAffineElement, eps_exp: int) -> HeckeScalar:
    """Character value on T_x: (-1)^len(x) times ((-1)^{n-1} eps^e)^m,
    where m is the rotation exponent of x."""
    n = x.n
    m = x.rotation_exponent()
    sign = -1 if ((n - 1) * m + length_ext(x)) % 2 else 1
    return HeckeScalar.monomial(n, sign, 0, m * eps_exp)


def character_of(h: HeckeElement, eps_exp: int) -> HeckeScalar:
    out = HeckeScalar.zero(h.n)
    for x, c in h._terms.items():
        out = out + c * steinberg_character(x, eps_exp)
    return out


def equal_mod_center(a: HeckeElement, b: HeckeElement) -> bool:
    """Equality after collapsing basis indices by central translations."""
    def reduce(h: HeckeElement) -> HeckeElement:
        out = HeckeElement.zero(h.n)
        for x, c in h._terms.items():
            out._add(x.normalize_central()[0], c)
        return out

    return reduce(a) == reduce(b)


def _cyclically_adjacent(i: int, j: int, n: int) -> bool:
    return (i - j) % n in (1, n - 1)


def verify_presentation(n: int) -> list[CheckResult]:
    """Re-derive the defining relations from the multiplication rules.

    Checks, as normal-form identities in symbolic q:
      * (T_{s_i} - q)(T_{s_i} + 1) = 0 for i = 0..n-1;
      * braid relations for cyclically adjacent pairs (n >= 3; for n = 2
        the two reflections generate an infinite dihedral group and no
        braid relation exists);
      * commutation for non-adjacent pairs (nonempty once n >= 4);
      * T_{s_i} T_r = T_r T_{s_{(i+1) mod n}};
      * T_r^n equals the basis element of the central translation, and
        the identity modulo the center;
      * T_r^n commutes with every generator;
      * the Steinberg character takes equal values on both sides of every
        relation instance, for every eps exponent, and takes the same
        value on all T_{s_i}.
    """
    results = []
    unit = HeckeElement.unit(n)
    gens = [HeckeElement.generator(n, i) for i in range(n)]
    q = HeckeScalar.q(n)
    q1 = HeckeScalar.q_minus_one(n)

    relation_pairs: list[tuple[str, HeckeElement, HeckeElement]] = []

    for i in range(n):
        lhs = mult_generator(gens[i], i)
        rhs = unit.scaled(q) + gens[i].scaled(q1)
        relation_pairs.append((f"quadratic[{i}]", lhs, rhs))

    for i in range(n):
        lhs = mult_rotation(gens[i])
        rhs = mult_generator(HeckeElement.rotation_term(n), (i + 1) % n)
        relation_pairs.append((f"rotation-conjugation[{i}]", lhs, rhs))

    if n >= 3:
        for i in range(n):
            for j in range(i + 1, n):
                if _cyclically_adjacent(i, j, n):
                    lhs = mult_generator(mult_generator(gens[i], j), i)
                    rhs = mult_generator(mult_generator(gens[j], i), j)
                    relation_pairs.append((f"braid[{i},{j}]", lhs, rhs))
                else:
                    lhs = mult_generator(gens[i], j)
                    rhs = mult_generator(gens[j], i)
                    relation_pairs.append((f"commuting[{i},{j}]", lhs, rhs))

    rot_power = unit
    for _ in range(n):
        rot_power = mult_rotation(rot_power)
    central = HeckeElement.basis(ExtAffineElement.translation((1,) * n))
    relation_pairs.append((f"rotation-power[{n}]", rot_power, central))

    for i in range(n):
        lhs = mult_generator(rot_power, i)
        rhs = multiply(gens[i], rot_power)
        relation_pairs.append((f"rotation-power-central[{i}]", lhs, rhs))

    for name, lhs, rhs in relation_pairs:
        results.append(CheckResult(f"relation:{name}", lhs == rhs))
        for e in range(n):
            ok = character_of(lhs, e) == character_of(rhs, e)
            results.append(CheckResult(f"character:{name}:eps={e}", ok))

    results.append(
        CheckResult(
            "rotation-power-mod-center",
            equal_mod_center(rot_power, unit),
        )
    )

    for e in range(n):
        values = [steinberg_character(ExtAffineElement.simple_reflection(n, i), e) for i in range(n)]
        ok = all(v == values[0] for v in values) and values[0] == HeckeScalar.monomial(n, -1)
        results.append(CheckResult(f"character-reflections-constant:eps={e}", ok))

    return results
