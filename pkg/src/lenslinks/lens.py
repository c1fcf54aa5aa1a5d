"""Links in lens spaces presented as band diagrams, and their lifts to S^3.

The lens space L(p,q) is the quotient of the 3-sphere by the free Z_p
action generated by (x, y) -> (zeta x, zeta^q y) for a primitive p-th root
of unity zeta.  A link in L(p,q) is presented here as a band diagram: a
braid-form tangle with n endpoints on the cut disk of the surgery solid
torus, closed by joining endpoint i on top to endpoint i on bottom.

Lifting a band diagram to the 3-sphere juxtaposes p copies of the tangle
and closes with the square of the half-twist raised to q, so the lifted
word is  word^p  followed by  garside(n)^{2q}.

H_1(L(p,q)) is cyclic of order p, generated by a single strand passing
once through the band; a component's homology class is its signed strand
count mod p.  The component count of the lift is tied to these classes by

    sum_i gcd(delta_i, p)  =  (number of lifted components),

which this module recomputes both ways as a permanent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .braid import BraidWord, closure_components, concat, garside, parse_braid_word, permutation, power
from .errors import ParseError


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; this signals a modeling bug, not bad input."""


@dataclass(frozen=True)
class LensSpace:
    """L(p,q) with p >= 1, gcd(p,q) = 1; L(1,0) is the 3-sphere."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be a positive integer")
        if self.p == 1:
            if self.q != 0:
                raise ValueError("the 3-sphere is written L(1,0)")
        elif not 1 <= self.q < self.p:
            raise ValueError("q must satisfy 1 <= q < p")
        elif math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} must be coprime")

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class HomologyClass:
    """An element of H_1(L(p,q)) = Z_p, stored as a residue 0 <= value < p."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1 or not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not a residue mod {self.modulus}")


@dataclass(frozen=True)
class BandDiagram:
    """A link in a lens space: a braid-form tangle between n band endpoints.

    ``orientations`` optionally assigns a sign to each closure component,
    listed in the order of :func:`components` (cycles sorted by their
    minimum strand); omitted means all positive.
    """

    space: LensSpace
    word: BraidWord
    orientations: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.orientations is not None:
            r = len(closure_components(self.word))
            if len(self.orientations) != r:
                raise ValueError(
                    f"{len(self.orientations)} orientations given for {r} components"
                )
            if any(sign not in (1, -1) for sign in self.orientations):
                raise ValueError("orientations must be +1 or -1")


def lift(d: BandDiagram) -> BraidWord:
    """The braid word whose closure is the lift of ``d`` in the 3-sphere."""
    closing = power(garside(d.word.strands), 2 * d.space.q)
    return concat(power(d.word, d.space.p), closing)


def components(d: BandDiagram) -> tuple[tuple[int, ...], ...]:
    """Cycle partition of the band endpoints; one cycle per component of the link."""
    return closure_components(d.word)


def homology_classes(d: BandDiagram) -> tuple[HomologyClass, ...]:
    """The class of each component: its signed strand count mod p."""
    p = d.space.p
    cycles = components(d)
    signs = d.orientations or (1,) * len(cycles)
    return tuple(
        HomologyClass((sign * len(cycle)) % p, p) for sign, cycle in zip(signs, cycles)
    )


def lifted_component_count(d: BandDiagram) -> int:
    """Number of components of the lift, as sum_i gcd(delta_i, p).

    The count is recomputed from the cycles of the lifted word's closure;
    disagreement raises :class:`ConsistencyError` because the two routes
    must coincide for every band diagram.
    """
    p = d.space.p
    from_classes = sum(math.gcd(c.value, p) for c in homology_classes(d))
    from_lift = len(closure_components(lift(d)))
    if from_classes != from_lift:
        raise ConsistencyError(
            f"homology predicts {from_classes} lifted components, "
            f"the lifted closure has {from_lift}"
        )
    return from_classes


def nullhomologous_orientation(d: BandDiagram) -> tuple[int, ...] | None:
    """A sign assignment making the total homology class vanish, if one exists.

    Searches all 2^r assignments; returns the first (in the order +1 before
    -1 per component) with  sum_i sign_i * length_i = 0 (mod p), else None.
    Existence is a necessary condition for the diagram to present an
    algebraic link.
    """
    p = d.space.p
    lengths = [len(cycle) for cycle in components(d)]
    for signs in product((1, -1), repeat=len(lengths)):
        if sum(s * l for s, l in zip(signs, lengths)) % p == 0:
            return signs
    return None


def parse_band_diagram(text: str) -> BandDiagram:
    """Parse ``"p q n : <letters>"`` with an optional ``"| + - ..."`` orientation suffix.

    Examples: ``"3 1 3 : 2 1 2 1"``, ``"3 1 2 : 1 1 | + -"``.
    """
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError("expected 'p q n : <braid word>'", len(text))
    fields = head.split()
    if len(fields) != 3:
        raise ParseError(f"expected three integers before ':', got {len(fields)}")
    try:
        p, q, n = (int(f) for f in fields)
    except ValueError:
        raise ParseError(f"non-integer in header {head.strip()!r}") from None

    word_text, bar, tail = rest.partition("|")
    orientations: tuple[int, ...] | None = None
    if bar:
        signs = []
        for token in tail.split():
            if token == "+":
                signs.append(1)
            elif token == "-":
                signs.append(-1)
            else:
                raise ParseError(f"orientation must be '+' or '-', got {token!r}")
        orientations = tuple(signs)

    try:
        space = LensSpace(p, q)
        word = parse_braid_word(word_text, n)
        return BandDiagram(space, word, orientations)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
