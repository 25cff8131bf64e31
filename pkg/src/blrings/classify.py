"""Ring classifiers over the ideal lattice, and subdirect decomposition.

Everything here is exhaustive over the (small) lattice; predicates return
verdicts with re-checkable witnesses.  classify_ring assembles the full
named report used by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from blrings import algebras
from blrings.construct import quotient
from blrings.ideals import (
    Ideal,
    IdealLattice,
    all_ideals,
    is_annihilator_ideal,
    is_maximal,
    is_prime,
    maximal_positions,
    prime_positions,
)
from blrings.rings import FiniteRing

PREDICATE_NAMES = [
    "generated-by-idempotents",
    "multiplication-ring",
    "pblr1",
    "pblr2",
    "pblr3",
    "pseudo-bl-ring",
    "bl-ring",
    "lukasiewicz-ring",
    "reduced",
    "baer",
    "von-neumann",
    "prime-ring",
    "subdirectly-irreducible",
    "special-primary",
    "degenerate",
]


class InternalInvariantError(Exception):
    """A theorem the implementation relies on failed; this is a bug."""


class NonUnitalError(Exception):
    """Raised by classifiers whose definition requires a two-sided unit."""


@dataclass
class PredicateResult:
    name: str
    verdict: bool
    witness: object = None
    note: str = ""


@dataclass
class ClassificationReport:
    ring: FiniteRing
    results: dict[str, PredicateResult] = field(default_factory=dict)

    def add(self, name, verdict, witness=None, note=""):
        self.results[name] = PredicateResult(name, bool(verdict), witness, note)

    def __getitem__(self, name: str) -> PredicateResult:
        return self.results[name]

    def verdict(self, name: str) -> bool:
        return self.results[name].verdict


def check_pblr1(ring: FiniteRing, lattice: IdealLattice):
    """I ^ J = I.(I ~> J) = (I -> J).I for all ideal pairs.

    Only the containments of the intersection can fail (the products are
    always inside it), so a witness is an offending pair.
    """
    meet, prod = lattice.meet_table, lattice.product_table
    rimp, limp = lattice.rimp_table, lattice.limp_table
    n = len(lattice)
    idx = np.arange(n)
    ok = (meet == prod[idx[:, None], limp]) & (meet == prod[rimp, idx[:, None]])
    if ok.all():
        return True, None
    i, j = np.argwhere(~ok)[0]
    return False, (int(i), int(j))


def check_pblr2(ring: FiniteRing, lattice: IdealLattice):
    """(I->J) + (J->I) = (I~>J) + (J~>I) = R for all ideal pairs."""
    s, rimp, limp = lattice.sum_table, lattice.rimp_table, lattice.limp_table
    ok = (s[rimp, rimp.T] == lattice.top) & (s[limp, limp.T] == lattice.top)
    if ok.all():
        return True, None
    i, j = np.argwhere(~ok)[0]
    return False, (int(i), int(j))


def check_pblr3(ring: FiniteRing, lattice: IdealLattice):
    """I ^ J = {0} forces I* + J* = R and I- + J- = R."""
    s = lattice.sum_table
    star, minus = lattice.ann_star_vec, lattice.ann_minus_vec
    disjoint = lattice.meet_table == lattice.bottom
    ok = ~disjoint | (
        (s[star[:, None], star[None, :]] == lattice.top)
        & (s[minus[:, None], minus[None, :]] == lattice.top)
    )
    if ok.all():
        return True, None
    i, j = np.argwhere(~ok)[0]
    return False, (int(i), int(j))


def is_multiplication_ring(ring: FiniteRing, lattice: IdealLattice):
    """Every containment I <= J factors as I = J.K = K'.J (definitional)."""
    prod, leq = lattice.product_table, lattice.leq
    n = len(lattice)
    for i in range(n):
        for j in range(n):
            if not leq[i, j]:
                continue
            if not ((prod[j, :] == i).any() and (prod[:, j] == i).any()):
                return False, (int(i), int(j))
    return True, None


def is_pseudo_bl_ring(ring: FiniteRing, lattice: IdealLattice):
    """Generated by idempotents plus PBLR-1 and PBLR-2."""
    gbi, _ = ring.generated_by_idempotents()
    p1, w1 = check_pblr1(ring, lattice)
    p2, w2 = check_pblr2(ring, lattice)
    verdict = gbi and p1 and p2
    witness = None if verdict else {"generated_by_idempotents": gbi,
                                    "pblr1": w1, "pblr2": w2}
    return verdict, witness


def is_bl_ring(ring: FiniteRing, lattice: IdealLattice) -> bool:
    """Commutative pseudo BL-ring whose two residuals coincide."""
    pbl, _ = is_pseudo_bl_ring(ring, lattice)
    return bool(pbl and ring.is_commutative
                and np.array_equal(lattice.rimp_table, lattice.limp_table))


def is_lukasiewicz_ring(ring: FiniteRing, lattice: IdealLattice) -> bool:
    """The ideal algebra satisfies all pseudo MV axioms."""
    alg = algebras.ideal_algebra(lattice)
    return algebras.passes(algebras.check_pseudo_mv(alg))


def is_von_neumann(ring: FiniteRing, lattice: IdealLattice) -> bool:
    """Unitary ring whose quotient by every prime ideal is a division ring.

    This follows the source definition, which is weaker than classical
    Von Neumann regularity.
    """
    if ring.one is None:
        raise NonUnitalError("Von Neumann test requires a unitary ring")
    for p in prime_positions(lattice):
        q, _ = quotient(ring, lattice[p])
        if not q.is_division_ring():
            return False
    return True


def _right_orbit(ring: FiniteRing, e: int) -> frozenset:
    return frozenset(int(v) for v in ring.mul[e, :])


def _left_orbit(ring: FiniteRing, e: int) -> frozenset:
    return frozenset(int(v) for v in ring.mul[:, e])


def is_baer(ring: FiniteRing, lattice: IdealLattice):
    """Every I* is eR and every I- is Re' for idempotents e, e'."""
    idems = ring.idempotents()
    right = {e: _right_orbit(ring, e) for e in idems}
    left = {e: _left_orbit(ring, e) for e in idems}
    witness = {}
    for pos in range(len(lattice)):
        star = lattice[int(lattice.ann_star_vec[pos])].members
        minus = lattice[int(lattice.ann_minus_vec[pos])].members
        e = next((e for e in idems if right[e] == star), None)
        e2 = next((e for e in idems if left[e] == minus), None)
        if e is None or e2 is None:
            return False, {"ideal": pos}
        witness[pos] = (e, e2)
    return True, witness


def is_subdirectly_irreducible(ring: FiniteRing, lattice: IdealLattice):
    """Intersection of all nonzero ideals is nonzero; returns the heart."""
    nonzero = [p for p in range(len(lattice)) if p != lattice.bottom]
    if not nonzero:
        return False, None
    acc = nonzero[0]
    for p in nonzero[1:]:
        acc = int(lattice.meet_table[acc, p])
    if acc == lattice.bottom:
        return False, None
    return True, acc


def is_special_primary(ring: FiniteRing, lattice: IdealLattice):
    """Unique maximal ideal M and every proper ideal is a power of M."""
    maxima = maximal_positions(lattice)
    if len(maxima) != 1:
        return False, {"maximal_ideals": maxima}
    m = maxima[0]
    prod = lattice.product_table
    powers = []
    cur = m
    while cur not in powers:
        powers.append(cur)
        cur = int(prod[cur, m])
    proper = [p for p in range(len(lattice)) if p != lattice.top]
    missing = [p for p in proper if p not in powers]
    if missing:
        return False, {"not_a_power": missing, "powers": powers}
    return True, {"maximal": m, "powers": powers}


def n_star(ring: FiniteRing, p: Ideal, lattice: IdealLattice) -> frozenset:
    """N*(P) = {x : x.s = 0 for some s outside the prime P}."""
    if not is_prime(p, lattice):
        raise ValueError("N*(P) requires a prime ideal")
    outside = np.flatnonzero(~p.bools)
    hit = (ring.mul[:, outside] == ring.zero).any(axis=1)
    return frozenset(int(x) for x in np.flatnonzero(hit))


def n_minus(ring: FiniteRing, p: Ideal, lattice: IdealLattice) -> frozenset:
    """N-(P) = {x : s.x = 0 for some s outside the prime P}."""
    if not is_prime(p, lattice):
        raise ValueError("N-(P) requires a prime ideal")
    outside = np.flatnonzero(~p.bools)
    hit = (ring.mul[outside, :] == ring.zero).any(axis=0)
    return frozenset(int(x) for x in np.flatnonzero(hit))


def check_lemma_4_4(ring: FiniteRing, lattice: IdealLattice):
    """Intersecting N*(P) (and N-(P)) over all primes leaves only zero.

    Hypothesis: ring generated by idempotents; a violation is noted but
    the check still runs.  Vacuously true when there is no prime ideal.
    """
    gbi, _ = ring.generated_by_idempotents()
    note = "" if gbi else "hypothesis violated: not generated by idempotents"
    primes = prime_positions(lattice)
    if not primes:
        return True, "vacuous: no prime ideals" if not note else note
    star = set(range(ring.order))
    minus = set(range(ring.order))
    for p in primes:
        star &= n_star(ring, lattice[p], lattice)
        minus &= n_minus(ring, lattice[p], lattice)
    ok = star == {ring.zero} and minus == {ring.zero}
    return ok, note


@dataclass
class Factor:
    kernel_pos: int
    elements: list[int]          # the x whose kernel this is
    ring: FiniteRing
    projection: np.ndarray


@dataclass
class DecompositionResult:
    ring: FiniteRing
    kernel_of: dict[int, int]                  # x -> chosen kernel position
    maximal_excluders: dict[int, list[int]]    # x -> all maximal excluders
    factors: list[Factor]
    kernels_intersect_to_zero: bool
    factors_subdirectly_irreducible: bool
    factors_pseudo_bl: bool
    note: str = ""


def subdirect_decomposition(ring: FiniteRing, lattice: IdealLattice) -> DecompositionResult:
    """Factor R through maximal x-excluding ideals K_x, one per x != 0.

    K_x is a maximal element of {I : x not in I}; ties between
    incomparable maximal excluders break by canonical lattice order (the
    full list is reported).  Asserts the kernel intersection is zero and
    classifies each factor.
    """
    n = len(lattice)
    kernel_of: dict[int, int] = {}
    excluders_of: dict[int, list[int]] = {}
    for x in range(ring.order):
        if x == ring.zero:
            continue
        excl = [p for p in range(n) if x not in lattice[p]]
        maximal = [p for p in excl
                   if not any(q != p and lattice.leq[p, q] for q in excl)]
        excluders_of[x] = maximal
        kernel_of[x] = maximal[0]
    inter = np.ones(ring.order, dtype=bool)
    for p in set(kernel_of.values()):
        inter &= lattice[p].bools
    kernels_zero = inter.sum() == 1 and bool(inter[ring.zero])

    factors = []
    all_si = True
    all_pbl = True
    for p in sorted(set(kernel_of.values())):
        fring, proj = quotient(ring, lattice[p])
        flat = all_ideals(fring)
        si, _ = is_subdirectly_irreducible(fring, flat)
        pbl, _ = is_pseudo_bl_ring(fring, flat)
        all_si &= si
        all_pbl &= pbl
        factors.append(Factor(
            kernel_pos=p,
            elements=[x for x, k in kernel_of.items() if k == p],
            ring=fring,
            projection=proj,
        ))
    pbl_r, _ = is_pseudo_bl_ring(ring, lattice)
    note = "" if pbl_r else "input ring is not a pseudo BL-ring; decomposition run anyway"
    return DecompositionResult(
        ring=ring,
        kernel_of=kernel_of,
        maximal_excluders=excluders_of,
        factors=factors,
        kernels_intersect_to_zero=kernels_zero,
        factors_subdirectly_irreducible=all_si,
        factors_pseudo_bl=all_pbl,
        note=note,
    )


def check_theorem_4_8_factor(ring: FiniteRing, lattice: IdealLattice) -> dict[str, bool]:
    """Structural checks on one subdirectly irreducible factor.

    annihilator-or-dense: each ideal is an annihilator ideal or dense on
    both sides; unique-atom: one minimal nonzero ideal; an-chains: AN*
    and AN- linearly ordered; heart-annihilator: the minimal ideal is an
    annihilator ideal; residual-collapse and residual-density are the
    two corollary conditions on residuals.
    """
    out: dict[str, bool] = {}
    n = len(lattice)
    star, minus = lattice.ann_star_vec, lattice.ann_minus_vec
    dense = [(int(star[p]) == lattice.bottom and int(minus[p]) == lattice.bottom)
             for p in range(n)]
    annih = [is_annihilator_ideal(lattice[p], lattice)[0] for p in range(n)]
    out["annihilator-or-dense"] = all(a or d for a, d in zip(annih, dense))
    out["unique-atom"] = len(lattice.atoms()) == 1 if n > 1 else True

    def _chain(pos_set):
        pos = sorted(pos_set)
        return all(lattice.leq[a, b] or lattice.leq[b, a]
                   for i, a in enumerate(pos) for b in pos[i + 1:])

    out["an-star-chain"] = _chain({int(p) for p in star})
    out["an-minus-chain"] = _chain({int(p) for p in minus})

    si, heart = is_subdirectly_irreducible(ring, lattice)
    if si:
        out["heart-annihilator"] = is_annihilator_ideal(lattice[heart], lattice)[0]
    else:
        out["heart-annihilator"] = n == 1   # trivial factor has no heart

    rimp, limp = lattice.rimp_table, lattice.limp_table
    ok = True
    for i in range(n):
        if not annih[i] or i == lattice.top:
            continue
        for j in range(n):
            if dense[j] and lattice.leq[i, j]:
                if int(rimp[j, i]) != i or int(limp[j, i]) != i:
                    ok = False
    out["residual-collapse"] = ok
    ok = True
    for i in range(n):
        for j in range(n):
            fwd = dense[int(rimp[i, j])] and dense[int(limp[i, j])]
            bwd = dense[int(rimp[j, i])] and dense[int(limp[j, i])]
            if not (fwd or bwd):
                ok = False
    out["residual-density"] = ok
    return out


def check_prime_maximal(ring: FiniteRing, lattice: IdealLattice):
    """Every prime ideal is maximal (pseudo BL hypothesis noted by caller)."""
    for p in prime_positions(lattice):
        if not is_maximal(lattice[p], lattice):
            return False, p
    return True, None


def classify_ring(ring: FiniteRing, lattice: IdealLattice | None = None) -> ClassificationReport:
    """Full named-predicate report for one ring."""
    if lattice is None:
        lattice = all_ideals(ring)
    rep = ClassificationReport(ring)
    gbi, gbi_map = ring.generated_by_idempotents()
    rep.add("generated-by-idempotents", gbi, witness=gbi_map if gbi else None)
    p1, w1 = check_pblr1(ring, lattice)
    rep.add("pblr1", p1, witness=w1)
    mult, wm = is_multiplication_ring(ring, lattice)
    if mult != p1:
        raise InternalInvariantError(
            f"multiplication-ring != PBLR-1 on {ring!r} (witness {wm or w1})")
    rep.add("multiplication-ring", mult, witness=wm)
    p2, w2 = check_pblr2(ring, lattice)
    rep.add("pblr2", p2, witness=w2)
    p3, w3 = check_pblr3(ring, lattice)
    rep.add("pblr3", p3, witness=w3)
    pbl = gbi and p1 and p2
    rep.add("pseudo-bl-ring", pbl)
    rep.add("bl-ring", is_bl_ring(ring, lattice))
    rep.add("lukasiewicz-ring", is_lukasiewicz_ring(ring, lattice))
    red, wred = ring.is_reduced()
    rep.add("reduced", red, witness=wred)
    baer, wbaer = is_baer(ring, lattice)
    rep.add("baer", baer, witness=wbaer if not baer else None)
    try:
        rep.add("von-neumann", is_von_neumann(ring, lattice))
    except NonUnitalError:
        rep.add("von-neumann", False,
                note="not applicable: ring has no two-sided unit")
    rep.add("prime-ring", is_prime(lattice[lattice.bottom], lattice))
    si, heart = is_subdirectly_irreducible(ring, lattice)
    rep.add("subdirectly-irreducible", si,
            witness=sorted(lattice[heart].members) if si else None)
    sp, wsp = is_special_primary(ring, lattice)
    rep.add("special-primary", sp, witness=wsp)
    rep.add("degenerate", ring.order == 1,
            note="zero ring: vacuously a pseudo BL-ring" if ring.order == 1 else "")
    return rep
