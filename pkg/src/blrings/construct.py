"""Structured ring constructors and the textual recipe grammar.

Grammar (EBNF, also in the README):

    spec     := "zmod" "(" INT ")"
              | "matrix" "(" spec "," INT ")"
              | "quotient" "(" spec "," "[" [ INT { "," INT } ] "]" ")"
              | "product" "(" spec { "," spec } ")"
              | "tables" "(" PATH ")"

A tables file holds whitespace-separated integers: order, zero, then the
order^2 add entries row by row, then the order^2 mul entries.

Constructor-built tables satisfy the ring axioms by construction; only
``tables(...)`` input goes through exhaustive validation.
"""

from __future__ import annotations

import re

import numpy as np

from blrings.ideals import Ideal, ideal_generated
from blrings.rings import FiniteRing, validate_ring

# explicit n x n tables above this order do not fit desk memory budgets
MAX_CONSTRUCTED_ORDER = 4096


class ConstructionError(Exception):
    """A recipe is structurally invalid (bad arity, bad generator, bad file)."""


class SizeBoundError(ConstructionError):
    """A recipe would build a ring beyond the supported order bound."""


class SpecParseError(Exception):
    """The textual recipe does not match the grammar."""


def zmod(n: int) -> FiniteRing:
    """Integers mod n; zmod(1) is the zero ring."""
    if not 1 <= n <= 256:
        raise SizeBoundError(f"zmod order must be in 1..256, got {n}")
    idx = np.arange(n, dtype=np.int32)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(add, mul, 0, provenance=f"zmod({n})")


def _mixed_radix(orders: list[int]):
    """Row-major weights for a tuple index over the given digit bases."""
    weights = np.ones(len(orders), dtype=np.int64)
    for t in range(len(orders) - 2, -1, -1):
        weights[t] = weights[t + 1] * orders[t + 1]
    return weights


def _digits(n_total: int, orders: list[int], weights) -> np.ndarray:
    idx = np.arange(n_total, dtype=np.int64)
    out = np.empty((n_total, len(orders)), dtype=np.int64)
    for t, (w, base) in enumerate(zip(weights, orders)):
        out[:, t] = (idx // w) % base
    return out


def matrix_ring(ring: FiniteRing, k: int) -> FiniteRing:
    """k x k matrices over the ring; entries indexed row-major mixed-radix."""
    if k < 1:
        raise ConstructionError(f"matrix dimension must be >= 1, got {k}")
    n = ring.order ** (k * k)
    if n > MAX_CONSTRUCTED_ORDER:
        raise SizeBoundError(
            f"matrix ring order {ring.order}^{k * k} = {n} exceeds bound {MAX_CONSTRUCTED_ORDER}")
    slots = k * k
    orders = [ring.order] * slots
    weights = _mixed_radix(orders)
    d = _digits(n, orders, weights)        # (n, k*k), row-major entries
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    radd, rmul = ring.add, ring.mul
    ent = d.reshape(n, k, k)
    for i in range(n):
        s = radd[d[i][None, :], d]                       # entrywise sums
        add[i] = (s * weights[None, :]).sum(axis=1)
        acc = np.full((n, k, k), ring.zero, dtype=np.int64)
        for r in range(k):
            for c in range(k):
                for s_ in range(k):
                    term = rmul[ent[i, r, s_], ent[:, s_, c]]
                    acc[:, r, c] = radd[acc[:, r, c], term]
        mul[i] = (acc.reshape(n, slots) * weights[None, :]).sum(axis=1)
    zero = int((np.full(slots, ring.zero, dtype=np.int64) * weights).sum())
    prov = f"matrix({ring.provenance or 'tables'},{k})"
    return FiniteRing(add, mul, zero, provenance=prov)


def matrix_ideal(ideal: Ideal, k: int, mring: FiniteRing) -> Ideal:
    """The ideal of the k x k matrix ring whose entries all lie in ``ideal``."""
    base = ideal.ring
    slots = k * k
    if mring.order != base.order ** slots:
        raise ConstructionError("matrix ring does not match the ideal's base ring")
    orders = [base.order] * slots
    weights = _mixed_radix(orders)
    d = _digits(mring.order, orders, weights)
    member = ideal.bools[d].all(axis=1)
    return Ideal(mring, np.flatnonzero(member))


def quotient(ring: FiniteRing, ideal: Ideal) -> tuple[FiniteRing, np.ndarray]:
    """R/I with canonical least-index coset representatives.

    Returns the quotient ring and the projection array (element -> coset
    index).  Cosets are indexed in increasing order of representative.
    """
    if ideal.ring is not ring:
        raise ConstructionError("ideal does not belong to the ring being quotiented")
    cosets = ring.add[:, ideal.elems]            # row x: the coset x + I
    rep = cosets.min(axis=1)
    reps = np.unique(rep)
    cls = np.searchsorted(reps, rep).astype(np.int32)
    q = len(reps)
    qadd = cls[ring.add[np.ix_(reps, reps)]]
    qmul = cls[ring.mul[np.ix_(reps, reps)]]
    zero = int(cls[ring.zero])
    prov = f"quotient({ring.provenance or 'tables'},{sorted(ideal.members)})"
    return FiniteRing(qadd, qmul, zero, provenance=prov), cls


def direct_product(rings: list[FiniteRing]) -> tuple[FiniteRing, list]:
    """Componentwise product; returns the ring and per-factor embeddings.

    Embedding t maps a factor element to the product element with that
    value in slot t and zero elsewhere.
    """
    if not rings:
        raise ConstructionError("direct product needs at least one factor")
    orders = [r.order for r in rings]
    n = 1
    for o in orders:
        n *= o
    if n > MAX_CONSTRUCTED_ORDER:
        raise SizeBoundError(f"product order {n} exceeds bound {MAX_CONSTRUCTED_ORDER}")
    weights = _mixed_radix(orders)
    d = _digits(n, orders, weights)
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        sa = np.empty((n, len(rings)), dtype=np.int64)
        sm = np.empty((n, len(rings)), dtype=np.int64)
        for t, r in enumerate(rings):
            sa[:, t] = r.add[d[i, t], d[:, t]]
            sm[:, t] = r.mul[d[i, t], d[:, t]]
        add[i] = (sa * weights[None, :]).sum(axis=1)
        mul[i] = (sm * weights[None, :]).sum(axis=1)
    zeros = np.array([r.zero for r in rings], dtype=np.int64)
    zero = int((zeros * weights).sum())
    embeddings = []
    for t, r in enumerate(rings):
        base = zeros.copy()
        emb = np.empty(r.order, dtype=np.int64)
        for x in range(r.order):
            v = base.copy()
            v[t] = x
            emb[x] = (v * weights).sum()
        embeddings.append(emb)
    prov = "product(" + ",".join(r.provenance or "tables" for r in rings) + ")"
    return FiniteRing(add, mul, zero, provenance=prov), embeddings


def poly_local_ring(base_n: int, c0: int, c1: int, name: str) -> FiniteRing:
    """Z_n[x] / (x^2 - c1*x - c0): elements a + b*x indexed as a + n*b."""
    m = base_n
    n = m * m
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        a, b = i % m, i // m
        for j in range(n):
            c, e = j % m, j // m
            add[i, j] = (a + c) % m + m * ((b + e) % m)
            const = (a * c + b * e * c0) % m
            lin = (a * e + b * c + b * e * c1) % m
            mul[i, j] = const + m * lin
    return FiniteRing(add, mul, 0, provenance=name)


def load_tables(path: str) -> FiniteRing:
    """Read a tables file and run full validation on it."""
    try:
        with open(path) as fh:
            nums = [int(tok) for tok in fh.read().split()]
    except OSError as exc:
        raise ConstructionError(f"cannot read tables file {path}: {exc}") from exc
    except ValueError as exc:
        raise ConstructionError(f"non-integer token in tables file {path}") from exc
    if len(nums) < 2:
        raise ConstructionError("tables file must start with order and zero")
    order, zero = nums[0], nums[1]
    if order < 1 or order > 256:
        raise SizeBoundError(f"tables order must be in 1..256, got {order}")
    body = nums[2:]
    if len(body) != 2 * order * order:
        raise ConstructionError(
            f"expected {2 * order * order} table entries, got {len(body)}")
    add = np.array(body[: order * order], dtype=np.int32).reshape(order, order)
    mul = np.array(body[order * order:], dtype=np.int32).reshape(order, order)
    return validate_ring(add, mul, zero, provenance=f"tables({path})")


_TOKEN = re.compile(r"\s*([A-Za-z_]\w*|\d+|[(),\[\]]|[^\s])")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _TOKEN.findall(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise SpecParseError(f"unexpected end of spec (wanted {expected or 'token'})")
        if expected is not None and tok != expected:
            raise SpecParseError(f"expected {expected!r}, got {tok!r}")
        self.pos += 1
        return tok

    def take_int(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise SpecParseError(f"expected integer, got {tok!r}")
        return int(tok)

    def parse(self) -> FiniteRing:
        ring = self.spec()
        if self.peek() is not None:
            raise SpecParseError(f"trailing input at {self.peek()!r}")
        return ring

    def spec(self) -> FiniteRing:
        head = self.take()
        if head == "zmod":
            self.take("(")
            n = self.take_int()
            self.take(")")
            return zmod(n)
        if head == "matrix":
            self.take("(")
            base = self.spec()
            self.take(",")
            k = self.take_int()
            self.take(")")
            return matrix_ring(base, k)
        if head == "quotient":
            self.take("(")
            base = self.spec()
            self.take(",")
            self.take("[")
            gens = []
            if self.peek() != "]":
                gens.append(self.take_int())
                while self.peek() == ",":
                    self.take(",")
                    gens.append(self.take_int())
            self.take("]")
            self.take(")")
            for g in gens:
                if not 0 <= g < base.order:
                    raise ConstructionError(
                        f"generator {g} out of range for ring of order {base.order}")
            ring, _ = quotient(base, ideal_generated(base, gens))
            return ring
        if head == "product":
            self.take("(")
            factors = [self.spec()]
            while self.peek() == ",":
                self.take(",")
                factors.append(self.spec())
            self.take(")")
            ring, _ = direct_product(factors)
            return ring
        if head == "tables":
            self.take("(")
            parts = []
            while self.peek() is not None and self.peek() != ")":
                parts.append(self.take())
            self.take(")")
            if not parts:
                raise SpecParseError("tables(...) needs a file path")
            return load_tables("".join(parts))
        raise SpecParseError(f"unknown constructor {head!r}")


def parse_spec(text: str) -> FiniteRing:
    """Build a ring from its textual recipe."""
    return _Parser(text).parse()
