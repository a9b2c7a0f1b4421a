"""Ground-truth multigraded Betti numbers via per-multidegree simplicial homology.

Independent of the combinatorial routes, this module computes the full Betti
table of an arbitrary monomial ideal: candidate multidegrees are the subset
lcms of the generators (the lcm lattice bounds every true shift), and the
Betti number at a multidegree is a reduced homology rank of the upper Koszul
complex there, computed over a prime field by boundary-matrix elimination.

The default prime is 32003; set POLYSHIFT_PRIME to override it, and compare
two primes with :func:`cross_prime_agreement` when characteristic effects
are a concern.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .errors import NotStronglyStableError, ResourceCapError
from .monomials import Monomial, MonomialIdeal
from .families import is_strongly_stable

DEFAULT_PRIME = int(os.environ.get("POLYSHIFT_PRIME", "32003"))
SECONDARY_PRIME = 101
LATTICE_CAP = 50_000


def lcm_lattice(I: MonomialIdeal, cap: int = LATTICE_CAP) -> list[Monomial]:
    """All lcms of nonempty generator subsets, by pairwise-lcm closure.

    Closing the generator set under pairwise lcm reaches every subset lcm,
    so no 2^m enumeration is needed.  Sorted descending-lexicographically.
    """
    seen: set[tuple[int, ...]] = {g.exponents for g in I.gens}
    frontier = list(seen)
    gens = [g.exponents for g in I.gens]
    while frontier:
        new: list[tuple[int, ...]] = []
        for x in frontier:
            for g in gens:
                merged = tuple(max(a, b) for a, b in zip(x, g))
                if merged not in seen:
                    seen.add(merged)
                    if len(seen) > cap:
                        raise ResourceCapError(
                            f"lcm lattice exceeds the cap of {cap} points"
                        )
                    new.append(merged)
        frontier = new
    return [Monomial(e) for e in sorted(seen, reverse=True)]


@dataclass(frozen=True)
class SimplicialComplexFrame:
    """The upper Koszul complex of an ideal at one multidegree.

    Vertices are the (1-based) variables in the support of the multidegree;
    faces are stored as bitmasks over ``vertices`` (bit k set = vertices[k]
    in the face).  Face membership is monotone downward by construction; the
    empty face has mask 0.  A frame with no faces at all is the void complex,
    distinct from the irrelevant complex whose only face is the empty one.
    """

    n: int
    multidegree: Monomial
    vertices: tuple[int, ...]
    face_masks: tuple[int, ...]

    @property
    def is_void(self) -> bool:
        return not self.face_masks

    def faces(self) -> list[tuple[int, ...]]:
        """Faces as sorted variable-index tuples (the empty face included)."""
        out = []
        for mask in self.face_masks:
            out.append(
                tuple(v for k, v in enumerate(self.vertices) if mask >> k & 1)
            )
        return out


def upper_koszul(I: MonomialIdeal, a: Monomial) -> SimplicialComplexFrame:
    """Faces F of supp(a) with x^a / x_F still inside the ideal."""
    supp0 = [i for i, e in enumerate(a.exponents) if e > 0]
    v = len(supp0)
    gens_arr = np.array([g.exponents for g in I.gens], dtype=np.int64).reshape(
        I.num_gens, I.n
    )
    count = 1 << v
    targets = np.tile(np.array(a.exponents, dtype=np.int64), (count, 1))
    for k, col in enumerate(supp0):
        bit = (np.arange(count) >> k) & 1
        targets[:, col] -= bit
    member = _kernels.contains_mask(gens_arr, targets)
    masks = tuple(int(m) for m in np.nonzero(member)[0])
    return SimplicialComplexFrame(
        I.n, a, tuple(i + 1 for i in supp0), masks
    )


def reduced_homology_ranks(frame: SimplicialComplexFrame, prime: int) -> dict[int, int]:
    """Nonzero reduced homology ranks of the frame, keyed by dimension.

    Uses the convention that the empty face is a (-1)-cell: the irrelevant
    complex {0} has rank 1 in dimension -1, the void complex has none.
    """
    masks = frame.face_masks
    if not masks:
        return {}
    v = len(frame.vertices)
    if v == 0:
        return {-1: 1}  # the irrelevant complex {empty face}
    maskset = set(masks)
    if len(masks) == 1 << v:
        return {}  # full simplex: contractible
    for k in range(v):
        bit = 1 << k
        if all((m | bit) in maskset for m in masks):
            return {}  # cone with apex k: contractible
    by_size: dict[int, list[int]] = {}
    for m in masks:
        by_size.setdefault(bin(m).count("1"), []).append(m)
    for s in by_size:
        by_size[s].sort()
    max_size = max(by_size)
    counts = {s: len(by_size.get(s, ())) for s in range(max_size + 1)}
    ranks = {0: 0}
    for s in range(1, max_size + 1):
        upper = by_size.get(s, [])
        lower = by_size.get(s - 1, [])
        if not upper or not lower:
            ranks[s] = 0
            continue
        row_index = {m: i for i, m in enumerate(lower)}
        B = np.zeros((len(lower), len(upper)), dtype=np.int64)
        for ci, m in enumerate(upper):
            bits = [k for k in range(v) if m >> k & 1]
            for pos, k in enumerate(bits):
                fm = m & ~(1 << k)
                B[row_index[fm], ci] = 1 if pos % 2 == 0 else prime - 1
        ranks[s] = _kernels.rank_mod_p(B, prime)
    ranks[max_size + 1] = 0
    out: dict[int, int] = {}
    for s in range(max_size + 1):
        h = counts[s] - ranks[s] - ranks.get(s + 1, 0)
        if h:
            out[s - 1] = h  # faces of size s have dimension s - 1
    return out


@dataclass
class BettiTable:
    """Multigraded Betti numbers: (homological index, multidegree) -> rank."""

    n: int
    entries: dict[tuple[int, Monomial], int] = field(default_factory=dict)
    prime: int = DEFAULT_PRIME

    @property
    def pd(self) -> int:
        """Projective dimension: the largest index present (-1 when empty)."""
        if not self.entries:
            return -1
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), r in self.entries.items():
            out[i] = out.get(i, 0) + r
        return dict(sorted(out.items()))

    def multidegrees(self, i: int) -> list[Monomial]:
        return sorted(
            (a for (k, a) in self.entries if k == i),
            key=lambda m: m.exponents,
            reverse=True,
        )

    def shift_ideal(self, j: int) -> MonomialIdeal:
        return MonomialIdeal(self.n, [a for (i, a) in self.entries if i == j])

    def is_linear(self, d: int) -> bool:
        """All entries concentrated in degree d + i: a d-linear resolution."""
        return all(a.degree == d + i for (i, a) in self.entries)


def betti_table(
    I: MonomialIdeal, prime: Optional[int] = None, cap: int = LATTICE_CAP
) -> BettiTable:
    """Full multigraded Betti table of the ideal over F_prime."""
    p = DEFAULT_PRIME if prime is None else prime
    table = BettiTable(I.n, {}, p)
    if I.is_zero:
        return table
    for a in lcm_lattice(I, cap):
        frame = upper_koszul(I, a)
        for dim, rank in reduced_homology_ranks(frame, p).items():
            table.entries[(dim + 1, a)] = rank
    return table


def hs_oracle(
    I: MonomialIdeal, j: int, table: Optional[BettiTable] = None
) -> MonomialIdeal:
    """The j-th homological shift ideal straight from the Betti table."""
    if table is None:
        table = betti_table(I)
    return table.shift_ideal(j)


def oracle_pd(I: MonomialIdeal, prime: Optional[int] = None) -> int:
    return betti_table(I, prime).pd


def cross_prime_agreement(
    I: MonomialIdeal, primes: tuple[int, int] = (DEFAULT_PRIME, SECONDARY_PRIME)
) -> bool:
    """Whether the Betti tables over two primes coincide entry by entry.

    Disagreement flags characteristic sensitivity; it is data, not an error.
    """
    first = betti_table(I, primes[0])
    second = betti_table(I, primes[1])
    return first.entries == second.entries


def ek_betti(I: MonomialIdeal) -> tuple[dict[int, int], int]:
    """Total Betti numbers of a strongly stable ideal by the closed formula:
    beta_i = sum over generators of binomial(max(u) - 1, i).

    Returns (totals, projective dimension).  Raises when the ideal is not
    strongly stable.
    """
    from math import comb

    if not is_strongly_stable(I).holds:
        raise NotStronglyStableError(
            "the closed Betti formula applies only to strongly stable ideals"
        )
    pd = 0
    totals: dict[int, int] = {}
    for u in I.gens:
        top = max(u.max_var - 1, 0)
        pd = max(pd, top)
        for i in range(top + 1):
            totals[i] = totals.get(i, 0) + comb(top, i)
    return dict(sorted(totals.items())), pd
