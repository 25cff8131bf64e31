"""Finite rings given by explicit operation tables.

Elements are indices 0..order-1.  A ring is an abelian group table ``add``
and an associative table ``mul`` distributing over it on both sides;
unitality is never assumed (classifiers that need a unit say so).
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

MAX_TABLE_ORDER = 256


class RingValidationError(Exception):
    """A ring axiom failed during exhaustive table validation.

    kind is one of {'table-shape', 'not-abelian-group',
    'mul-not-associative', 'not-distributive'}; ``law`` names the exact
    sublaw and ``witness`` holds up to 3 element indices violating it.
    """

    def __init__(self, kind: str, law: str, witness: tuple[int, ...] = ()):
        self.kind = kind
        self.law = law
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"{kind} ({law}) at witness {self.witness}")


def _as_table(table, name: str) -> np.ndarray:
    arr = np.ascontiguousarray(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise RingValidationError("table-shape", f"{name} table is not square")
    n = arr.shape[0]
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise RingValidationError("table-shape", f"{name} entries out of range")
    arr.flags.writeable = False
    return arr


class FiniteRing:
    """Immutable finite ring over element indices.

    Constructors in blrings.construct build tables that satisfy the ring
    axioms by construction and instantiate this class directly; use
    :func:`validate_ring` for untrusted tables.
    """

    def __init__(self, add, mul, zero: int = 0, provenance: str | None = None):
        self.add = _as_table(add, "add")
        self.mul = _as_table(mul, "mul")
        self.order = self.add.shape[0]
        if self.mul.shape[0] != self.order:
            raise RingValidationError("table-shape", "add/mul size mismatch")
        if not 0 <= zero < self.order:
            raise RingValidationError("table-shape", "zero index out of range")
        self.zero = int(zero)
        self.provenance = provenance

    def __repr__(self):
        tag = self.provenance or "tables"
        return f"FiniteRing(order={self.order}, {tag})"

    def __eq__(self, other):
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (
            self.order == other.order
            and self.zero == other.zero
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self):
        return hash((self.order, self.zero, self.add.tobytes(), self.mul.tobytes()))

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def neg(self) -> np.ndarray:
        """Additive inverse of each element."""
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.order, dtype=np.int32)
        out[rows] = cols
        return out

    def idempotents(self) -> list[int]:
        """All e with e*e == e; always contains zero."""
        diag = self.mul[np.arange(self.order), np.arange(self.order)]
        return [int(e) for e in np.flatnonzero(diag == np.arange(self.order))]

    def generated_by_idempotents(self) -> tuple[bool, dict[int, int]]:
        """Does every x have an idempotent e with e*x == x*e == x?

        Returns the verdict and a witness map x -> e (partial on failure).
        """
        witness: dict[int, int] = {}
        idems = self.idempotents()
        for x in range(self.order):
            for e in idems:
                if self.mul[e, x] == x and self.mul[x, e] == x:
                    witness[x] = e
                    break
            else:
                return False, witness
        return True, witness

    def units(self) -> dict:
        """Left units, right units and the two-sided unit if it exists."""
        eye = np.arange(self.order)
        left = [int(e) for e in range(self.order) if np.array_equal(self.mul[e], eye)]
        right = [int(e) for e in range(self.order) if np.array_equal(self.mul[:, e], eye)]
        one = None
        if left and right:
            # a left and a right unit coincide and are unique
            one = left[0]
        return {"left": left, "right": right, "one": one}

    @cached_property
    def one(self) -> int | None:
        return self.units()["one"]

    def is_reduced(self) -> tuple[bool, int | None]:
        """True iff zero is the only nilpotent; witness is a nilpotent else."""
        for x in range(self.order):
            if x == self.zero:
                continue
            p = x
            for _ in range(self.order):
                p = int(self.mul[p, x])
                if p == self.zero:
                    return False, x
        return True, None

    def is_division_ring(self) -> bool:
        """Two-sided unit distinct from zero and all nonzero elements invertible."""
        one = self.one
        if one is None or one == self.zero:
            return False
        for x in range(self.order):
            if x == self.zero:
                continue
            inv = [y for y in range(self.order)
                   if self.mul[x, y] == one and self.mul[y, x] == one]
            if not inv:
                return False
        return True


def validate_ring(add, mul, zero: int = 0, provenance: str | None = None) -> FiniteRing:
    """Exhaustively check the ring axioms on raw tables.

    Returns a FiniteRing or raises RingValidationError naming the first
    violated law with a witness.  All checks sweep every pair/triple.
    """
    ring = FiniteRing(add, mul, zero, provenance)
    n = ring.order
    if n > MAX_TABLE_ORDER:
        raise RingValidationError("table-shape", f"order {n} exceeds bound {MAX_TABLE_ORDER}")
    a, m = ring.add, ring.mul
    z = ring.zero

    bad = np.argwhere(a != a.T)
    if len(bad):
        x, y = bad[0]
        raise RingValidationError("not-abelian-group", "add not commutative", (x, y))
    bad = np.flatnonzero(a[z] != np.arange(n))
    if len(bad):
        raise RingValidationError("not-abelian-group", "zero not neutral", (bad[0],))
    for x in range(n):
        lhs = a[a[x]]          # (x+y)+z
        rhs = a[x][a]          # x+(y+z)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            y, zz = bad[0]
            raise RingValidationError("not-abelian-group", "add not associative", (x, y, zz))
    no_inv = np.flatnonzero(~(a == z).any(axis=1))
    if len(no_inv):
        raise RingValidationError("not-abelian-group", "missing additive inverse", (no_inv[0],))

    for x in range(n):
        lhs = m[m[x]]          # (x*y)*z
        rhs = m[x][m]          # x*(y*z)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            y, zz = bad[0]
            raise RingValidationError("mul-not-associative", "mul not associative", (x, y, zz))

    for x in range(n):
        row = m[x]
        lhs = row[a]                       # x*(y+z)
        rhs = a[np.ix_(row, row)]          # x*y + x*z
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            y, zz = bad[0]
            raise RingValidationError("not-distributive", "left distributivity", (x, y, zz))
        col = m[:, x]
        lhs = col[a]                       # (y+z)*x
        rhs = a[np.ix_(col, col)]          # y*x + z*x
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            y, zz = bad[0]
            raise RingValidationError("not-distributive", "right distributivity", (x, y, zz))

    # derivable, asserted anyway: zero annihilates
    assert (m[z] == z).all() and (m[:, z] == z).all()
    return ring
