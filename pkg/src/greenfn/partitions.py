"""Integer partition combinatorics shared by the group, orbit, and oracle code.

Partitions are non-increasing tuples of positive ints.  The canonical
ordering used for class/irreducible/orbit indexing everywhere in the
package is ascending lexicographic, which refines dominance, so (1,...,1)
always comes first and (n) last.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

__all__ = [
    "partitions",
    "zee",
    "n_stat",
    "dominates",
    "dominance_covers",
    "conjugate",
    "label",
    "parse_label",
]


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, ascending lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[tuple[int, ...]] = []

    def build(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(n, n, ())
    return tuple(sorted(out))


def zee(mu: tuple[int, ...]) -> int:
    """The centralizer order z_mu = prod_i i^{m_i} m_i!; class size is n!/z_mu."""
    z = 1
    for part in set(mu):
        m = mu.count(part)
        z *= part**m * factorial(m)
    return z


def n_stat(lam: tuple[int, ...]) -> int:
    """The partition statistic n(lam) = sum (i-1) * lam_i (rows 1-indexed)."""
    return sum(i * part for i, part in enumerate(lam))


def dominates(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """True when lam >= mu in dominance order (|lam| must equal |mu|)."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of the same integer")
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def dominance_covers(n: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Map each partition of n to the partitions it covers in dominance order."""
    parts = partitions(n)
    below = {
        lam: [mu for mu in parts if mu != lam and dominates(lam, mu)] for lam in parts
    }
    covers = {}
    for lam in parts:
        cov = [
            mu
            for mu in below[lam]
            if not any(mu != nu and dominates(nu, mu) for nu in below[lam])
        ]
        covers[lam] = tuple(sorted(cov))
    return covers


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose partition."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def label(lam: tuple[int, ...]) -> str:
    """Canonical string label, e.g. (3, 1) -> '3,1'."""
    return ",".join(str(part) for part in lam)


def parse_label(text: str) -> tuple[int, ...]:
    parts = tuple(int(chunk) for chunk in text.split(",") if chunk)
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"not a partition label: {text!r}")
    return parts
