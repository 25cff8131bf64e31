"""Two-sided ideals and the full ideal lattice of a finite ring.

Ideals are membership sets over element indices.  The lattice carries
every ideal in a canonical order (cardinality, then sorted membership
tuple) so that reports, DOT output and tie-breaks are deterministic.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from blrings import kernels
from blrings.rings import FiniteRing


class Ideal:
    """A two-sided ideal of a parent FiniteRing, identified by membership."""

    __slots__ = ("ring", "members", "_bools")

    def __init__(self, ring: FiniteRing, members):
        self.ring = ring
        self.members = frozenset(int(x) for x in members)
        self._bools = None

    @property
    def bools(self) -> np.ndarray:
        if self._bools is None:
            b = np.zeros(self.ring.order, dtype=bool)
            b[list(self.members)] = True
            b.flags.writeable = False
            self._bools = b
        return self._bools

    @property
    def elems(self) -> np.ndarray:
        return np.flatnonzero(self.bools)

    @property
    def sort_key(self) -> tuple:
        return (len(self.members), tuple(sorted(self.members)))

    def __len__(self):
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __le__(self, other: "Ideal") -> bool:
        return self.members <= other.members

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.members == other.members

    def __hash__(self):
        return hash((id(self.ring), self.members))

    def __repr__(self):
        return "{" + ",".join(map(str, sorted(self.members))) + "}"

    def is_valid(self) -> bool:
        return kernels.is_ideal(self.ring.add, self.ring.mul, self.bools, self.ring.zero)


def _same_ring(*ideals: Ideal) -> FiniteRing:
    ring = ideals[0].ring
    for i in ideals[1:]:
        if i.ring is not ring:
            raise ValueError("ideals belong to different parent rings")
    return ring


def ideal_generated(ring: FiniteRing, gens) -> Ideal:
    """Least two-sided ideal containing ``gens`` (fixpoint closure)."""
    seed = np.zeros(ring.order, dtype=bool)
    seed[ring.zero] = True
    for g in gens:
        if not 0 <= g < ring.order:
            raise ValueError(f"generator {g} out of range for order {ring.order}")
        seed[g] = True
    closed = kernels.ideal_closure(ring.add, ring.mul, seed)
    return Ideal(ring, np.flatnonzero(closed))


def sum_ideals(i: Ideal, j: Ideal) -> Ideal:
    """I + J, the join: additive closure of the union (already two-sided)."""
    ring = _same_ring(i, j)
    closed = kernels.additive_closure(ring.add, i.bools | j.bools)
    return Ideal(ring, np.flatnonzero(closed))


def intersect_ideals(i: Ideal, j: Ideal) -> Ideal:
    ring = _same_ring(i, j)
    return Ideal(ring, np.flatnonzero(i.bools & j.bools))


def product_ideals(i: Ideal, j: Ideal) -> Ideal:
    """I . J: finite sums of pairwise products a*b with a in I, b in J."""
    ring = _same_ring(i, j)
    seed = np.zeros(ring.order, dtype=bool)
    seed[ring.zero] = True
    if len(i) and len(j):
        seed[ring.mul[np.ix_(i.elems, j.elems)].ravel()] = True
    closed = kernels.additive_closure(ring.add, seed)
    out = Ideal(ring, np.flatnonzero(closed))
    # two-sided I, J make the additive closure of products an ideal already
    assert out.is_valid()
    return out


def residual_right(i: Ideal, j: Ideal) -> Ideal:
    """I -> J = {x : x.I is contained in J}."""
    ring = _same_ring(i, j)
    members = kernels.residual_right(ring.mul, i.elems, j.bools)
    out = Ideal(ring, np.flatnonzero(members))
    assert out.is_valid()
    return out


def residual_left(i: Ideal, j: Ideal) -> Ideal:
    """I ~> J = {x : I.x is contained in J}."""
    ring = _same_ring(i, j)
    members = kernels.residual_left(ring.mul, i.elems, j.bools)
    out = Ideal(ring, np.flatnonzero(members))
    assert out.is_valid()
    return out


def ann_star(i: Ideal) -> Ideal:
    """I* = {x : x.I = 0}, the residual of I into the zero ideal."""
    return residual_right(i, Ideal(i.ring, [i.ring.zero]))


def ann_minus(i: Ideal) -> Ideal:
    """I- = {x : I.x = 0}."""
    return residual_left(i, Ideal(i.ring, [i.ring.zero]))


def is_dense(i: Ideal) -> dict:
    """star-dense iff I* = {0}; minus-dense iff I- = {0}."""
    zero = {i.ring.zero}
    return {
        "star": ann_star(i).members == zero,
        "minus": ann_minus(i).members == zero,
    }


class IdealLattice:
    """All two-sided ideals of a ring, canonically ordered and indexed."""

    def __init__(self, ring: FiniteRing, ideals: list[Ideal]):
        self.ring = ring
        self.ideals = sorted(ideals, key=lambda i: i.sort_key)
        self.index = {i.members: pos for pos, i in enumerate(self.ideals)}
        self.bottom = self.index[frozenset({ring.zero})]
        self.top = self.index[frozenset(range(ring.order))]

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def __getitem__(self, pos: int) -> Ideal:
        return self.ideals[pos]

    def pos(self, i: Ideal) -> int:
        try:
            return self.index[i.members]
        except KeyError:
            raise KeyError(f"ideal {i!r} not in lattice") from None

    @cached_property
    def leq(self) -> np.ndarray:
        """Inclusion matrix: leq[a, b] iff ideals[a] <= ideals[b]."""
        n = len(self)
        out = np.zeros((n, n), dtype=bool)
        for a, ia in enumerate(self.ideals):
            for b, ib in enumerate(self.ideals):
                out[a, b] = ia.members <= ib.members
        out.flags.writeable = False
        return out

    def _op_table(self, fn) -> np.ndarray:
        n = len(self)
        out = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            for b in range(n):
                out[a, b] = self.pos(fn(self.ideals[a], self.ideals[b]))
        out.flags.writeable = False
        return out

    @cached_property
    def sum_table(self) -> np.ndarray:
        return self._op_table(sum_ideals)

    @cached_property
    def meet_table(self) -> np.ndarray:
        return self._op_table(intersect_ideals)

    @cached_property
    def product_table(self) -> np.ndarray:
        return self._op_table(product_ideals)

    @cached_property
    def rimp_table(self) -> np.ndarray:
        return self._op_table(residual_right)

    @cached_property
    def limp_table(self) -> np.ndarray:
        return self._op_table(residual_left)

    @cached_property
    def ann_star_vec(self) -> np.ndarray:
        return self.rimp_table[:, self.bottom]

    @cached_property
    def ann_minus_vec(self) -> np.ndarray:
        return self.limp_table[:, self.bottom]

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (a, b): a < b with nothing strictly between."""
        n = len(self)
        out = []
        for a in range(n):
            for b in range(n):
                if a == b or not self.leq[a, b]:
                    continue
                between = any(
                    c != a and c != b and self.leq[a, c] and self.leq[c, b]
                    for c in range(n)
                )
                if not between:
                    out.append((a, b))
        return out

    def atoms(self) -> list[int]:
        return [b for (a, b) in self.covers() if a == self.bottom]


def all_ideals(ring: FiniteRing) -> IdealLattice:
    """Every two-sided ideal: principal ideals closed under binary sum.

    Every ideal of a finite ring is a finite sum of principal ideals of
    its elements, so the sum-closure of the principal ideals is complete.
    """
    add, mul = ring.add, ring.mul
    n = ring.order
    seen: dict[frozenset, Ideal] = {}
    work: list[Ideal] = []

    def _push(i: Ideal):
        if i.members not in seen:
            seen[i.members] = i
            work.append(i)

    _push(Ideal(ring, [ring.zero]))
    for a in range(n):
        seed = np.zeros(n, dtype=bool)
        seed[ring.zero] = True
        seed[a] = True
        closed = kernels.ideal_closure(add, mul, seed)
        _push(Ideal(ring, np.flatnonzero(closed)))

    principal = list(seen.values())
    while work:
        i = work.pop()
        for p in principal:
            if p.members <= i.members:
                continue
            _push(sum_ideals(i, p))
    lattice = IdealLattice(ring, list(seen.values()))
    return lattice


def is_annihilator_ideal(i: Ideal, lattice: IdealLattice) -> tuple[bool, dict]:
    """Conjunctive form: I = J* for some J and I = K- for some K.

    The one-sided variants are reported separately in the witness dict.
    """
    pos = lattice.pos(i)
    star_js = [int(j) for j in np.flatnonzero(lattice.ann_star_vec == pos)]
    minus_ks = [int(k) for k in np.flatnonzero(lattice.ann_minus_vec == pos)]
    verdict = bool(star_js) and bool(minus_ks)
    witness = {
        "star_of": star_js[0] if star_js else None,
        "minus_of": minus_ks[0] if minus_ks else None,
        "is_star_annihilator": bool(star_js),
        "is_minus_annihilator": bool(minus_ks),
    }
    return verdict, witness


def is_prime(p: Ideal, lattice: IdealLattice) -> bool:
    """P != R and I.J <= P forces I <= P or J <= P, ideal-wise."""
    pp = lattice.pos(p)
    if pp == lattice.top:
        return False
    prod, leq = lattice.product_table, lattice.leq
    n = len(lattice)
    for a in range(n):
        for b in range(n):
            if leq[prod[a, b], pp] and not (leq[a, pp] or leq[b, pp]):
                return False
    return True


def is_maximal(p: Ideal, lattice: IdealLattice) -> bool:
    """P != R with no ideal strictly between P and R."""
    pp = lattice.pos(p)
    if pp == lattice.top:
        return False
    return all(
        c == pp or c == lattice.top or not lattice.leq[pp, c]
        for c in range(len(lattice))
    )


def prime_positions(lattice: IdealLattice) -> list[int]:
    return [a for a in range(len(lattice)) if is_prime(lattice[a], lattice)]


def maximal_positions(lattice: IdealLattice) -> list[int]:
    return [a for a in range(len(lattice)) if is_maximal(lattice[a], lattice)]


def exhaustive_ideal_oracle(ring: FiniteRing) -> list[frozenset]:
    """Independent oracle: filter all 2^n subsets for the ideal axioms."""
    masks = kernels.enumerate_ideals_exhaustive(ring.add, ring.mul, ring.zero)
    out = []
    for mask in masks:
        out.append(frozenset(i for i in range(ring.order) if (mask >> i) & 1))
    return sorted(out, key=lambda s: (len(s), tuple(sorted(s))))
