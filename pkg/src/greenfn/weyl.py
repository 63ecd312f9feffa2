"""Numerical presentation of a Weyl group.

A ``WeylDatum`` carries exactly the data the downstream graded-multiplicity
computations need: conjugacy classes with sizes and the characteristic
polynomial det(1 - t*w) of each class on the reflection representation,
an integer character table, and the fundamental invariant degrees.  A
generator is built in for the symmetric groups; other types enter through
the validating file loader (schema "green-weyl/1") using published tables.

Character values are exact integers throughout: characters of Weyl groups
are rational, and every irreducible is self-dual, so no conjugation or
field embedding ever enters the inner products.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from pathlib import Path

from . import partitions as ptn
from .errors import BoundExceeded, ParseError, ValidationError
from .laurent import LaurentPoly

__all__ = [
    "ConjClass",
    "IrrChar",
    "WeylDatum",
    "generate_symmetric_group",
    "murnaghan_nakayama",
    "save_datum",
    "load_datum",
    "product_character",
    "inner_product",
]

WEYL_SCHEMA = "green-weyl/1"


@dataclass(frozen=True)
class ConjClass:
    label: str
    size: int
    refl_charpoly: LaurentPoly  # det(1 - t*w) on the reflection representation


@dataclass(frozen=True)
class IrrChar:
    label: str
    dim: int
    values: tuple[int, ...]  # one integer per class


@dataclass(frozen=True)
class WeylDatum:
    name: str
    order: int
    rank: int
    degrees: tuple[int, ...]
    classes: tuple[ConjClass, ...]
    irreducibles: tuple[IrrChar, ...]
    trivial_index: int
    sign_index: int

    @property
    def d(self) -> int:
        """dim of the flag variety: sum of (degree - 1)."""
        return sum(deg - 1 for deg in self.degrees)

    @property
    def identity_index(self) -> int:
        """Index of the identity class (charpoly (1-t)^rank)."""
        target = (LaurentPoly.one() - LaurentPoly.t()) ** self.rank
        for i, cls in enumerate(self.classes):
            if cls.refl_charpoly == target:
                return i
        raise ValidationError("no class has the identity characteristic polynomial")

    @property
    def irr_labels(self) -> tuple[str, ...]:
        return tuple(chi.label for chi in self.irreducibles)

    def irr_index(self, label: str) -> int:
        for i, chi in enumerate(self.irreducibles):
            if chi.label == label:
                return i
        raise KeyError(f"no irreducible labeled {label!r}")

    def sign_values(self) -> tuple[int, ...]:
        return self.irreducibles[self.sign_index].values

    def validate(self) -> None:
        """Check every structural invariant; raise ValidationError listing all failures."""
        errs: list[str] = []
        if sum(c.size for c in self.classes) != self.order:
            errs.append(
                f"class sizes sum to {sum(c.size for c in self.classes)}, group order is {self.order}"
            )
        if prod(self.degrees) != self.order:
            errs.append(f"product of degrees {self.degrees} != group order {self.order}")
        if len(self.irreducibles) != len(self.classes):
            errs.append(
                f"{len(self.irreducibles)} irreducibles vs {len(self.classes)} classes"
            )
        one = LaurentPoly.one()
        for cls in self.classes:
            p = cls.refl_charpoly
            if p.coeff(0) != 1:
                errs.append(f"class {cls.label}: charpoly has constant term {p.coeff(0)}, not 1")
            if p.degree != 2 * self.rank or not p.is_t_polynomial():
                errs.append(f"class {cls.label}: charpoly is not degree {self.rank} in t")
        ident = None
        target = (one - LaurentPoly.t()) ** self.rank
        for i, cls in enumerate(self.classes):
            if cls.refl_charpoly == target:
                ident = i
        if ident is None:
            errs.append("no identity class found (charpoly (1-t)^rank)")
        for chi in self.irreducibles:
            if len(chi.values) != len(self.classes):
                errs.append(f"character {chi.label}: wrong number of values")
                continue
            if ident is not None and chi.values[ident] != chi.dim:
                errs.append(
                    f"character {chi.label}: value on identity is {chi.values[ident]}, dim is {chi.dim}"
                )
            if chi.dim <= 0:
                errs.append(f"character {chi.label}: nonpositive dimension")
            if any(abs(v) > chi.dim for v in chi.values):
                errs.append(f"character {chi.label}: a value exceeds the dimension bound")
        if not (0 <= self.trivial_index < len(self.irreducibles)):
            errs.append("trivial_index out of range")
        elif any(v != 1 for v in self.irreducibles[self.trivial_index].values):
            errs.append("trivial character is not constantly 1")
        if not (0 <= self.sign_index < len(self.irreducibles)):
            errs.append("sign_index out of range")
        else:
            sign = self.irreducibles[self.sign_index]
            for cls, v in zip(self.classes, sign.values):
                expected = (-1) ** self.rank * cls.refl_charpoly.t_coeff(self.rank)
                if v != expected:
                    errs.append(
                        f"sign character value {v} on class {cls.label} "
                        f"disagrees with det from charpoly ({expected})"
                    )
        if len(self.irreducibles) == len(self.classes):
            for i, chi in enumerate(self.irreducibles):
                for j in range(i, len(self.irreducibles)):
                    psi = self.irreducibles[j]
                    if len(chi.values) != len(self.classes) or len(psi.values) != len(self.classes):
                        continue
                    ip = inner_product(self, chi.values, psi.values)
                    if ip != (1 if i == j else 0):
                        errs.append(
                            f"characters {chi.label}, {psi.label}: inner product {ip}, "
                            f"expected {1 if i == j else 0}"
                        )
        if errs:
            raise ValidationError(errs)


# -- symmetric groups ---------------------------------------------------------


@lru_cache(maxsize=None)
def murnaghan_nakayama(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Character value chi^lam on the class of cycle type mu, by border strips.

    Convention: chi^(n) is trivial and chi^(1^n) is sign.  Implemented on
    beta-numbers: removing a border strip of size k means lowering one
    beta-number by k, with sign (-1)^(number of beta-numbers jumped over).
    """
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    if not lam:
        return 1
    k = mu[0]
    rest = mu[1:]
    ell = len(lam)
    betas = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(betas)
    total = 0
    for b in betas:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in betas if nb < c < b)
        new_betas = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(c - (ell - 1 - i) for i, c in enumerate(new_betas))
        new_lam = tuple(part for part in new_lam if part > 0)
        total += (-1) ** height * murnaghan_nakayama(new_lam, rest)
    return total


def _sn_refl_charpoly(mu: tuple[int, ...]) -> LaurentPoly:
    """det(1 - t*w) on the (n-1)-dim reflection rep: prod (1-t^mu_i) / (1-t)."""
    num = LaurentPoly.one()
    for part in mu:
        num = num * (LaurentPoly.one() - LaurentPoly.t(part))
    return num.divide_exact(LaurentPoly.one() - LaurentPoly.t())


def generate_symmetric_group(n: int, bound: int = 10) -> WeylDatum:
    """WeylDatum for S_n with classes and irreducibles indexed by partitions."""
    if n < 2:
        raise ValidationError(f"symmetric group generator needs n >= 2, got {n}")
    if n > bound:
        raise BoundExceeded(f"n = {n} exceeds the configured bound {bound}")
    parts = ptn.partitions(n)
    order = factorial(n)
    classes = tuple(
        ConjClass(label=ptn.label(mu), size=order // ptn.zee(mu), refl_charpoly=_sn_refl_charpoly(mu))
        for mu in parts
    )
    irreducibles = tuple(
        IrrChar(
            label=ptn.label(lam),
            dim=murnaghan_nakayama(lam, (1,) * n),
            values=tuple(murnaghan_nakayama(lam, mu) for mu in parts),
        )
        for lam in parts
    )
    datum = WeylDatum(
        name=f"S{n}",
        order=order,
        rank=n - 1,
        degrees=tuple(range(2, n + 1)),
        classes=classes,
        irreducibles=irreducibles,
        trivial_index=len(parts) - 1,
        sign_index=0,
    )
    datum.validate()
    return datum


# -- file format --------------------------------------------------------------


def datum_to_payload(datum: WeylDatum) -> dict:
    return {
        "schema": WEYL_SCHEMA,
        "name": datum.name,
        "order": datum.order,
        "rank": datum.rank,
        "degrees": list(datum.degrees),
        "classes": [
            {"label": c.label, "size": c.size, "refl_charpoly": c.refl_charpoly.to_triples()}
            for c in datum.classes
        ],
        "irreducibles": [
            {"label": chi.label, "dim": chi.dim, "values": list(chi.values)}
            for chi in datum.irreducibles
        ],
        "trivial_index": datum.trivial_index,
        "sign_index": datum.sign_index,
    }


def datum_from_payload(payload: dict) -> WeylDatum:
    try:
        if payload["schema"] != WEYL_SCHEMA:
            raise ParseError(f"expected schema {WEYL_SCHEMA!r}, got {payload.get('schema')!r}")
        classes = tuple(
            ConjClass(
                label=str(c["label"]),
                size=int(c["size"]),
                refl_charpoly=LaurentPoly.from_triples(c["refl_charpoly"]),
            )
            for c in payload["classes"]
        )
        irreducibles = []
        for chi in payload["irreducibles"]:
            values = chi["values"]
            if any(not isinstance(v, int) for v in values):
                raise ParseError(f"character {chi['label']}: non-integer value in table")
            irreducibles.append(
                IrrChar(label=str(chi["label"]), dim=int(chi["dim"]), values=tuple(values))
            )
        datum = WeylDatum(
            name=str(payload["name"]),
            order=int(payload["order"]),
            rank=int(payload["rank"]),
            degrees=tuple(int(x) for x in payload["degrees"]),
            classes=classes,
            irreducibles=tuple(irreducibles),
            trivial_index=int(payload["trivial_index"]),
            sign_index=int(payload["sign_index"]),
        )
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed group datum: {exc}") from exc
    datum.validate()
    return datum


def save_datum(datum: WeylDatum, path: str | Path) -> None:
    Path(path).write_text(json.dumps(datum_to_payload(datum), indent=2, sort_keys=True) + "\n")


def load_datum(path: str | Path) -> WeylDatum:
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read group datum {path}: {exc}") from exc
    return datum_from_payload(payload)


# -- class-function utilities -------------------------------------------------


def product_character(
    datum: WeylDatum, i: int, j: int, twist_by_sign: bool = False
) -> tuple[int, ...]:
    """Pointwise product chi_i * chi_j, optionally twisted by the sign character."""
    vi = datum.irreducibles[i].values
    vj = datum.irreducibles[j].values
    out = [a * b for a, b in zip(vi, vj)]
    if twist_by_sign:
        out = [a * s for a, s in zip(out, datum.sign_values())]
    return tuple(out)


def inner_product(datum: WeylDatum, f, g) -> Fraction:
    """Class-function pairing (1/|W|) sum |C| f(C) g(C), exact."""
    if len(f) != len(datum.classes) or len(g) != len(datum.classes):
        raise ValueError("class functions need one entry per class")
    total = sum(
        Fraction(cls.size) * Fraction(a) * Fraction(b)
        for cls, a, b in zip(datum.classes, f, g)
    )
    return total / datum.order
