"""Graded multiplicities in the coinvariant algebra, and the omega matrix.

The cohomology of the flag variety is the coinvariant algebra of W, graded
so that the Molien variable t tracks cohomological degree 2.  For a class
function f, the graded multiplicity polynomial is the Molien-type sum

    F_f(t) = prod_j (1 - t^{d_j}) * (1/|W|) sum_C |C| f(C) / det(1 - t w_C),

a polynomial of degree at most d with nonnegative integer coefficients
whenever f is a genuine character.  Fake degrees, the Ext-dimension tables
(pairing chi * psi against the grading), and the omega matrix (pairing
chi * psi * sign, shifted by t^{-2d}) are all instances of this one sum.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeCoefficient, NotPolynomial, ValidationError
from .laurent import LaurentPoly, RationalFunction
from .springer import SpringerDatum
from .weyl import WeylDatum, product_character

__all__ = [
    "GradedMultiplicity",
    "OmegaMatrix",
    "graded_multiplicity",
    "fake_degree",
    "ext_dimension_table",
    "build_omega",
    "complementary_degree_check",
    "poincare_polynomial",
]


@dataclass(frozen=True)
class GradedMultiplicity:
    """A polynomial in t whose t^i coefficient counts copies in H^{2i}."""

    poly: LaurentPoly

    def t_coefficient(self, i: int) -> Fraction:
        return self.poly.t_coeff(i)

    @property
    def top_degree(self) -> int:
        deg = self.poly.degree
        return 0 if deg is None else deg // 2

    @property
    def total(self) -> Fraction:
        """Value at t = 1: total multiplicity across all degrees."""
        return self.poly.at_t_one()

    def coefficients(self, through_degree: int) -> list[int]:
        return [int(self.poly.t_coeff(i)) for i in range(through_degree + 1)]

    def __str__(self) -> str:
        return str(self.poly)


def _check_graded(poly: LaurentPoly, d: int, character: bool) -> None:
    if not poly.is_t_polynomial():
        raise NotPolynomial(f"graded multiplicity {poly} has a non-integral t-exponent")
    deg = poly.degree
    if deg is not None and deg > 2 * d:
        raise NotPolynomial(f"graded multiplicity {poly} exceeds top degree {d}")
    if character:
        if not poly.has_integer_coeffs():
            raise NegativeCoefficient(f"graded multiplicity {poly} has a non-integer coefficient")
        if not poly.has_nonnegative_coeffs():
            raise NegativeCoefficient(f"graded multiplicity {poly} has a negative coefficient")


def graded_multiplicity(weyl: WeylDatum, f, *, character: bool = True) -> GradedMultiplicity:
    """Molien sum of the class function f against the coinvariant grading.

    With character=True (the default) the result must have nonnegative
    integer coefficients; a violation means the datum is corrupt.
    """
    if len(f) != len(weyl.classes):
        raise ValueError("class function needs one entry per class")
    acc = RationalFunction.zero()
    for cls, value in zip(weyl.classes, f):
        if not value:
            continue
        weight = LaurentPoly.constant(Fraction(cls.size * value, weyl.order))
        acc = acc + RationalFunction(weight, cls.refl_charpoly)
    degrees_product = LaurentPoly.one()
    for deg in weyl.degrees:
        degrees_product = degrees_product * (LaurentPoly.one() - LaurentPoly.t(deg))
    poly = (acc * RationalFunction(degrees_product)).to_poly()
    _check_graded(poly, weyl.d, character)
    return GradedMultiplicity(poly)


def fake_degree(weyl: WeylDatum, chi: int) -> GradedMultiplicity:
    """Graded multiplicity of the irreducible chi itself."""
    return graded_multiplicity(weyl, weyl.irreducibles[chi].values)


def ext_dimension_table(weyl: WeylDatum, chi: int, psi: int) -> GradedMultiplicity:
    """dim Hom^{2i} between the simples labeled chi and psi, as coeff of t^i.

    Odd cohomological degrees vanish identically and are not represented.
    """
    return graded_multiplicity(weyl, product_character(weyl, chi, psi))


def poincare_polynomial(weyl: WeylDatum) -> LaurentPoly:
    """prod_j (1 - t^{d_j}) / (1 - t)^rank, the graded dimension of the coinvariants."""
    num = LaurentPoly.one()
    for deg in weyl.degrees:
        num = num * (LaurentPoly.one() - LaurentPoly.t(deg))
    return num.divide_exact((LaurentPoly.one() - LaurentPoly.t()) ** weyl.rank)


def complementary_degree_check(weyl: WeylDatum, chi: int) -> bool:
    """Whether F_{chi * sign}(t) == t^d * F_chi(1/t) (top/bottom degree symmetry)."""
    twisted = graded_multiplicity(weyl, product_character(weyl, chi, weyl.trivial_index, twist_by_sign=True))
    plain = fake_degree(weyl, chi)
    return twisted.poly == plain.poly.bar().shift(2 * weyl.d)


@dataclass(frozen=True)
class OmegaMatrix:
    """The symmetric pairing matrix over Irr(W) feeding the solver."""

    labels: tuple[str, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]
    d: int

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.labels)

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i, n))

    def content_hash(self) -> str:
        payload = {
            "labels": list(self.labels),
            "d": self.d,
            "entries": [[p.to_triples() for p in row] for row in self.entries],
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
        return hashlib.sha256(blob).hexdigest()


def build_omega(weyl: WeylDatum, springer: SpringerDatum) -> OmegaMatrix:
    """Entry (chi, psi) is t^{-2d} * F_{chi * psi * sign}(t).

    Every entry is an independent Molien sum; the full matrix is computed
    and then checked for symmetry rather than symmetrized by construction.
    """
    labels = weyl.irr_labels
    missing = [lab for lab in labels if lab not in springer.support_map]
    if missing:
        raise ValidationError([f"support map has no orbit for irreducible {lab}" for lab in missing])
    k = len(labels)
    shift = -4 * weyl.d  # t^{-2d} in s-units
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            gm = graded_multiplicity(weyl, product_character(weyl, i, j, twist_by_sign=True))
            row.append(gm.poly.shift(shift))
        rows.append(tuple(row))
    omega = OmegaMatrix(labels=labels, entries=tuple(rows), d=weyl.d)
    if not omega.is_symmetric():
        raise ValidationError("omega matrix is not symmetric; datum is corrupt")
    return omega
