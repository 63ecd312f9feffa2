"""Orbit poset, dimensions, and the support map of the correspondence.

A ``SpringerDatum`` is the combinatorial shadow the solver needs: nilpotent
orbits with their (even) dimensions, the closure order stored as covering
relations, and the map sending each irreducible label to the orbit its
simple perverse sheaf lives on.  In type A the orbits are partitions, the
closure order is dominance, dim O_lam = 2(d - n(lam)), and the support map
is the identity on partition labels, so the trivial character sits on the
regular orbit and the sign character on the zero orbit.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from . import partitions as ptn
from .errors import ParseError, UnknownOrbit, ValidationError

__all__ = [
    "Orbit",
    "SpringerDatum",
    "BlockStructure",
    "generate_type_A",
    "save_springer",
    "load_springer",
    "block_structure",
]

SPRINGER_SCHEMA = "green-springer/1"


@dataclass(frozen=True)
class Orbit:
    label: str
    dim: int


@dataclass(frozen=True)
class SpringerDatum:
    orbits: tuple[Orbit, ...]
    covers: dict[str, tuple[str, ...]]  # orbit -> orbits immediately below it
    support_map: dict[str, str]  # irreducible label -> orbit label
    _below: dict[str, frozenset[str]] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        errs = self._structural_errors()
        if errs:
            raise ValidationError(errs)
        object.__setattr__(self, "_below", self._reachability())

    def _structural_errors(self) -> list[str]:
        errs = []
        labels = [o.label for o in self.orbits]
        if len(set(labels)) != len(labels):
            errs.append("duplicate orbit labels")
        known = set(labels)
        for o in self.orbits:
            if o.dim < 0 or o.dim % 2 != 0:
                errs.append(f"orbit {o.label}: dimension {o.dim} is not an even nonnegative integer")
        dims = {o.label: o.dim for o in self.orbits}
        for lab, below in self.covers.items():
            if lab not in known:
                errs.append(f"covering relation names unknown orbit {lab}")
                continue
            for c in below:
                if c not in known:
                    errs.append(f"orbit {lab} covers unknown orbit {c}")
                elif dims[c] >= dims[lab]:
                    errs.append(
                        f"closure order not dimension-monotone: {c} (dim {dims[c]}) "
                        f"below {lab} (dim {dims[lab]})"
                    )
        for irr, orb in self.support_map.items():
            if orb not in known:
                errs.append(f"support of {irr} is unknown orbit {orb}")
        return errs

    def _reachability(self) -> dict[str, frozenset[str]]:
        """Strictly-below sets; raises on a cycle (cannot happen if dims are monotone)."""
        below: dict[str, frozenset[str]] = {}
        in_progress: set[str] = set()

        def visit(lab: str) -> frozenset[str]:
            if lab in below:
                return below[lab]
            if lab in in_progress:
                raise ValidationError(f"closure order has a cycle through {lab}")
            in_progress.add(lab)
            acc: set[str] = set()
            for c in self.covers.get(lab, ()):
                acc.add(c)
                acc |= visit(c)
            in_progress.discard(lab)
            below[lab] = frozenset(acc)
            return below[lab]

        for o in self.orbits:
            visit(o.label)
        return below

    @property
    def orbit_labels(self) -> tuple[str, ...]:
        return tuple(o.label for o in self.orbits)

    def dim(self, label: str) -> int:
        for o in self.orbits:
            if o.label == label:
                return o.dim
        raise UnknownOrbit(f"no orbit labeled {label!r}")

    def has_orbit(self, label: str) -> bool:
        return any(o.label == label for o in self.orbits)

    def leq(self, a: str, b: str) -> bool:
        """Closure order: a <= b."""
        if a == b:
            return True
        return a in self._below[b]

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def orbit_of(self, irr_label: str) -> str:
        try:
            return self.support_map[irr_label]
        except KeyError:
            raise ValidationError(f"support map has no entry for irreducible {irr_label!r}")

    def dim_of_irr(self, irr_label: str) -> int:
        return self.dim(self.orbit_of(irr_label))


def generate_type_A(n: int) -> SpringerDatum:
    """Type-A orbit datum: partitions of n under dominance, dim = 2(d - n(lam))."""
    if n < 2:
        raise ValidationError(f"type A generator needs n >= 2, got {n}")
    d = n * (n - 1) // 2
    parts = ptn.partitions(n)
    orbits = tuple(Orbit(label=ptn.label(lam), dim=2 * (d - ptn.n_stat(lam))) for lam in parts)
    covers = {
        ptn.label(lam): tuple(ptn.label(mu) for mu in below)
        for lam, below in ptn.dominance_covers(n).items()
    }
    support = {ptn.label(lam): ptn.label(lam) for lam in parts}
    return SpringerDatum(orbits=orbits, covers=covers, support_map=support)


# -- file format --------------------------------------------------------------


def springer_to_payload(datum: SpringerDatum) -> dict:
    return {
        "schema": SPRINGER_SCHEMA,
        "orbits": [
            {"label": o.label, "dim": o.dim, "covers": list(datum.covers.get(o.label, ()))}
            for o in datum.orbits
        ],
        "support_map": dict(datum.support_map),
    }


def save_springer(datum: SpringerDatum, path: str | Path) -> None:
    Path(path).write_text(json.dumps(springer_to_payload(datum), indent=2, sort_keys=True) + "\n")


def load_springer(path: str | Path, weyl=None) -> SpringerDatum:
    """Load and validate; when a WeylDatum is given, also check the support map is total."""
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read springer datum {path}: {exc}") from exc
    try:
        if payload["schema"] != SPRINGER_SCHEMA:
            raise ParseError(f"expected schema {SPRINGER_SCHEMA!r}, got {payload.get('schema')!r}")
        orbits = tuple(Orbit(label=str(o["label"]), dim=int(o["dim"])) for o in payload["orbits"])
        covers = {str(o["label"]): tuple(str(c) for c in o.get("covers", ())) for o in payload["orbits"]}
        support = {str(k): str(v) for k, v in payload["support_map"].items()}
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed springer datum: {exc}") from exc
    datum = SpringerDatum(orbits=orbits, covers=covers, support_map=support)
    if weyl is not None:
        errs = [
            f"support map missing irreducible {lab}"
            for lab in weyl.irr_labels
            if lab not in datum.support_map
        ]
        errs += [
            f"support map names unknown irreducible {lab}"
            for lab in datum.support_map
            if lab not in weyl.irr_labels
        ]
        max_dim = 2 * weyl.d
        errs += [
            f"orbit {o.label}: dimension {o.dim} exceeds 2d = {max_dim}"
            for o in datum.orbits
            if o.dim > max_dim
        ]
        if errs:
            raise ValidationError(errs)
    return datum


# -- block structure -----------------------------------------------------------


@dataclass(frozen=True)
class BlockStructure:
    """Orbits in a linear extension of closure order, smallest first,
    each carrying the irreducible labels supported on it."""

    blocks: tuple[tuple[str, tuple[str, ...]], ...]
    springer: SpringerDatum

    @property
    def orbit_order(self) -> tuple[str, ...]:
        return tuple(orb for orb, _ in self.blocks)

    def irr_labels(self) -> tuple[str, ...]:
        return tuple(lab for _, labs in self.blocks for lab in labs)


def block_structure(springer: SpringerDatum, seed: int | None = None) -> BlockStructure:
    """Linear extension of the closure order (deterministic, or seeded random).

    Kahn's algorithm: an orbit becomes available once everything strictly
    below it is placed.  Without a seed the smallest available orbit (by
    dimension, then label) is taken; with a seed the choice is by a seeded
    RNG, which exercises the solver's independence of the extension.
    """
    rng = random.Random(seed) if seed is not None else None
    remaining = {o.label for o in springer.orbits}
    placed: set[str] = set()
    order: list[str] = []
    dims = {o.label: o.dim for o in springer.orbits}
    while remaining:
        ready = sorted(
            (lab for lab in remaining if springer._below[lab] <= placed),
            key=lambda lab: (dims[lab], lab),
        )
        if not ready:
            raise ValidationError("closure order has a cycle; no linear extension exists")
        pick = rng.choice(ready) if rng is not None else ready[0]
        order.append(pick)
        placed.add(pick)
        remaining.discard(pick)
    by_orbit: dict[str, list[str]] = {}
    for irr_label in sorted(springer.support_map):
        by_orbit.setdefault(springer.support_map[irr_label], []).append(irr_label)
    blocks = tuple((orb, tuple(by_orbit[orb])) for orb in order if orb in by_orbit)
    return BlockStructure(blocks=blocks, springer=springer)
