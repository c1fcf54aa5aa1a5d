"""Reduced Burau representation and Alexander polynomials of closed braids.

The reduced Burau representation sends a braid on n strands to an
(n-1)x(n-1) matrix over Z[t, t^-1].  The generator s_i acts as the identity
except on column i, which becomes

    t * col_{i-1}  -  t * col_i  +  col_{i+1}

(matrix entries (i-1,i) = t, (i,i) = -t, (i+1,i) = 1, rows outside 1..n-1
dropped); its inverse has entries (i-1,i) = 1, (i,i) = -1/t, (i+1,i) = 1/t.
The Alexander polynomial of the closure is then

    det(burau(w) - id) / (1 + t + ... + t^{n-1})

up to a unit +-t^k, and every comparison here happens after normalizing
away the unit: the lowest exponent is shifted to 0 and the sign fixed so
its coefficient is positive.

Burau is faithful on at most 3 strands; on more strands equal matrices are
a strong necessary condition, not a proof of braid equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .laurent import LaurentMatrix, LaurentPoly, divide_exact


@dataclass(frozen=True)
class AlexanderPoly:
    """A unit-normalized Alexander polynomial.

    Either zero, or the minimum stored exponent is 0 with a positive
    coefficient; two closures have the same polynomial up to units exactly
    when their normalized forms are equal.
    """

    poly: LaurentPoly

    def __post_init__(self):
        if not self.poly.is_zero:
            exp = self.poly.min_exp()
            if exp != 0 or self.poly.coefficient(0) <= 0:
                raise ValueError("AlexanderPoly must be unit-normalized")

    @staticmethod
    def from_laurent(p: LaurentPoly) -> AlexanderPoly:
        """Normalize an arbitrary Laurent polynomial by a unit +-t^k."""
        if p.is_zero:
            return AlexanderPoly(p)
        p = p.shift(-p.min_exp())
        if p.coefficient(0) < 0:
            p = -p
        return AlexanderPoly(p)

    def __str__(self) -> str:
        return str(self.poly)


def _generator_matrix(n: int, letter: int) -> LaurentMatrix:
    d = n - 1
    i = abs(letter)
    rows = [[LaurentPoly.one() if r == c else LaurentPoly.zero() for c in range(d)] for r in range(d)]
    col = i - 1
    if letter > 0:
        rows[col][col] = LaurentPoly.monomial(1, -1)
        if col - 1 >= 0:
            rows[col - 1][col] = LaurentPoly.monomial(1)
        if col + 1 < d:
            rows[col + 1][col] = LaurentPoly.one()
    else:
        rows[col][col] = LaurentPoly.monomial(-1, -1)
        if col - 1 >= 0:
            rows[col - 1][col] = LaurentPoly.one()
        if col + 1 < d:
            rows[col + 1][col] = LaurentPoly.monomial(-1)
    return LaurentMatrix.from_rows(rows)


def burau_reduced(w: BraidWord) -> LaurentMatrix:
    """Product of the reduced Burau generator matrices in word order."""
    if w.strands < 2:
        raise ValueError("the reduced Burau representation needs at least 2 strands")
    acc = LaurentMatrix.identity(w.strands - 1)
    for letter in w.letters:
        acc = acc @ _generator_matrix(w.strands, letter)
    return acc


def alexander_of_closure(w: BraidWord) -> AlexanderPoly:
    """The one-variable Alexander polynomial of the closure of ``w``.

    Computed as det(burau(w) - id) divided exactly by 1 + t + ... + t^{n-1},
    then unit-normalized.  Split links (in particular unlinks on >= 2
    strands) give the zero polynomial.
    """
    n = w.strands
    numerator = (burau_reduced(w) - LaurentMatrix.identity(n - 1)).det()
    if numerator.is_zero:
        return AlexanderPoly(LaurentPoly.zero())
    cyclic_sum = LaurentPoly.from_dict({k: 1 for k in range(n)})
    return AlexanderPoly.from_laurent(divide_exact(numerator, cyclic_sum))


def equal_up_to_unit(a: AlexanderPoly, b: AlexanderPoly) -> bool:
    """Whether a = +-t^k b; after normalization this is plain equality."""
    return a.poly == b.poly


def torus_braid(a: int, b: int) -> BraidWord:
    """The standard positive braid (s_{b-1} ... s_1)^a on b strands, closing to T(a,b)."""
    if a < 1 or b < 1:
        raise ValueError("torus parameters must be positive")
    run = tuple(range(b - 1, 0, -1))
    return BraidWord(b, run * a)
