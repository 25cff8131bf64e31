"""Pure-Python (numpy) implementations of the hot set kernels.

All functions take operation tables as read-only int32 numpy arrays of
shape (n, n) whose entries are element indices, and membership sets as
uint8/bool arrays of length n.  The compiled twin in ``_kernels_c.pyx``
implements the same contracts with plain loops; ``blrings.kernels``
picks whichever is importable.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def ideal_closure(add: np.ndarray, mul: np.ndarray, seed: np.ndarray) -> np.ndarray:
    """Close ``seed`` under addition and two-sided multiplication by every
    ring element.  For a nonempty seed in a finite ring this is the least
    two-sided ideal containing the seed (additive inverses come for free:
    a finite set closed under + is a subgroup)."""
    n = add.shape[0]
    members = seed.astype(bool).copy()
    if not members.any():
        return members
    while True:
        e = np.flatnonzero(members)
        reach = np.zeros(n, dtype=bool)
        reach[add[np.ix_(e, e)].ravel()] = True
        reach[mul[:, e].ravel()] = True
        reach[mul[e, :].ravel()] = True
        if not (reach & ~members).any():
            return members
        members |= reach


def additive_closure(add: np.ndarray, seed: np.ndarray) -> np.ndarray:
    """Close ``seed`` under addition (subgroup closure)."""
    members = seed.astype(bool).copy()
    if not members.any():
        return members
    n = add.shape[0]
    while True:
        e = np.flatnonzero(members)
        reach = np.zeros(n, dtype=bool)
        reach[add[np.ix_(e, e)].ravel()] = True
        if not (reach & ~members).any():
            return members
        members |= reach


def residual_right(mul: np.ndarray, i_elems: np.ndarray, j_members: np.ndarray) -> np.ndarray:
    """{x : x*a in J for every a in I}."""
    if len(i_elems) == 0:
        return np.ones(mul.shape[0], dtype=bool)
    return j_members.astype(bool)[mul[:, i_elems]].all(axis=1)


def residual_left(mul: np.ndarray, i_elems: np.ndarray, j_members: np.ndarray) -> np.ndarray:
    """{x : a*x in J for every a in I}."""
    if len(i_elems) == 0:
        return np.ones(mul.shape[0], dtype=bool)
    return j_members.astype(bool)[mul[i_elems, :]].all(axis=0)


def is_ideal(add: np.ndarray, mul: np.ndarray, members: np.ndarray, zero: int) -> bool:
    """Two-sided ideal test for an explicit membership set."""
    m = members.astype(bool)
    if not m[zero]:
        return False
    e = np.flatnonzero(m)
    if not m[add[np.ix_(e, e)]].all():
        return False
    if not m[mul[:, e]].all():
        return False
    return bool(m[mul[e, :]].all())


def enumerate_ideals_exhaustive(add: np.ndarray, mul: np.ndarray, zero: int) -> list[int]:
    """All two-sided ideals found by filtering every one of the 2^n subsets.

    Independent oracle for the closure-based enumeration; n is capped at 20
    to keep the sweep desk-scale.  Returns sorted bitmasks.
    """
    n = add.shape[0]
    if n > 20:
        raise ValueError(f"exhaustive subset sweep capped at order 20, got {n}")
    total = 1 << n
    bits = np.arange(total, dtype=np.int64)
    # membership matrix: row s, column k == element k in subset s
    b = ((bits[:, None] >> np.arange(n)) & 1).astype(bool)
    ok = b[:, zero].copy()
    # multiplicative closure: element i in S forces all two-sided products
    # with i into S
    prods = np.zeros((n, n), dtype=bool)
    for i in range(n):
        prods[i, mul[i, :]] = True
        prods[i, mul[:, i]] = True
    required = (b @ prods.astype(np.int64)) > 0
    ok &= ~(required & ~b).any(axis=1)
    # additive closure: for each i in S the translate add[i, S] stays in S;
    # add[i] is a bijection, so the translate is a column permutation
    for i in range(n):
        inv = np.empty(n, dtype=np.int64)
        inv[add[i, :]] = np.arange(n)
        img = b[:, inv]
        ok &= ~(b[:, i] & (img & ~b).any(axis=1))
    return [int(m) for m in bits[ok]]
