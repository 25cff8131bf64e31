"""Executable statement catalog over a corpus of finite rings.

Each catalog entry turns one numbered statement into a per-ring check
with an explicit hypothesis filter.  Outcomes are pass, fail (with a
witness), vacuous (hypothesis filtered the ring out) or
skipped-too-large (per-ring time budget exhausted).  Theorem-tagged
entries must never fail: a failure is an implementation bug and the CLI
turns it into a nonzero exit.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from blrings import algebras, classify
from blrings.construct import (
    direct_product,
    matrix_ideal,
    matrix_ring,
    poly_local_ring,
    quotient,
    zmod,
)
from blrings.ideals import Ideal, all_ideals, prime_positions
from blrings.rings import FiniteRing

DEFAULT_BUDGET = 10.0   # seconds per ring


@dataclass
class PropertyRecord:
    ring: str
    prop: str
    outcome: str                 # pass | fail | vacuous | skipped-too-large
    witness: str = ""

    def as_dict(self):
        return {"ring": self.ring, "property": self.prop,
                "outcome": self.outcome, "witness": self.witness}


@dataclass
class CorpusEntry:
    name: str
    ring: FiniteRing
    factors: list[FiniteRing] | None = None   # product provenance, if any


class RingCtx:
    """Per-ring cache shared by all property checks."""

    def __init__(self, entry: CorpusEntry):
        self.entry = entry
        self.ring = entry.ring
        self.name = entry.name

    @cached_property
    def lattice(self):
        return all_ideals(self.ring)

    @cached_property
    def gbi(self) -> bool:
        return self.ring.generated_by_idempotents()[0]

    @cached_property
    def pblr1(self) -> bool:
        return classify.check_pblr1(self.ring, self.lattice)[0]

    @cached_property
    def pblr2(self) -> bool:
        return classify.check_pblr2(self.ring, self.lattice)[0]

    @cached_property
    def pblr3(self) -> bool:
        return classify.check_pblr3(self.ring, self.lattice)[0]

    @cached_property
    def multiplication(self) -> bool:
        return classify.is_multiplication_ring(self.ring, self.lattice)[0]

    @cached_property
    def pseudo_bl(self) -> bool:
        return self.gbi and self.pblr1 and self.pblr2

    @cached_property
    def algebra(self):
        return algebras.ideal_algebra(self.lattice)

    @cached_property
    def quotients(self) -> list[tuple[int, "RingCtx"]]:
        """(lattice position, quotient ctx) for every ideal; bottom reuses self."""
        out = []
        for pos in range(len(self.lattice)):
            if pos == self.lattice.bottom:
                out.append((pos, self))
                continue
            q, _ = quotient(self.ring, self.lattice[pos])
            out.append((pos, RingCtx(CorpusEntry(f"{self.name}/{pos}", q))))
        return out

    @cached_property
    def decomposition(self):
        return classify.subdirect_decomposition(self.ring, self.lattice)


# ---------------------------------------------------------------------------
# property checks: fn(ctx) -> (outcome, witness-string)

def _verdict(ok, witness="") -> tuple[str, str]:
    return ("pass", "") if ok else ("fail", str(witness))


def p_l3_2(c: RingCtx):
    lat = c.lattice
    rimp, limp = lat.rimp_table, lat.limp_table
    meet, s = lat.meet_table, lat.sum_table
    idx = np.arange(len(lat))
    ok = (
        (rimp == rimp[idx[:, None], meet]).all()
        and (limp == limp[idx[:, None], meet]).all()
        and (rimp[s, idx[None, :]] == rimp).all()
        and (limp[s, idx[None, :]] == limp).all()
    )
    return _verdict(ok)


def p_l3_3(c: RingCtx):
    lat = c.lattice
    idx = np.arange(len(lat))
    lhs1 = lat.product_table[lat.rimp_table, idx[:, None]]
    lhs2 = lat.product_table[idx[:, None], lat.limp_table]
    leq = lat.leq
    ok = leq[lhs1, lat.meet_table].all() and leq[lhs2, lat.meet_table].all()
    return _verdict(ok)


def _pblr1_inclusions(lat) -> bool:
    idx = np.arange(len(lat))
    a = lat.leq[lat.meet_table, lat.product_table[lat.rimp_table, idx[:, None]]]
    b = lat.leq[lat.meet_table, lat.product_table[idx[:, None], lat.limp_table]]
    return bool(a.all() and b.all())


def p_p3_4_1(c: RingCtx):
    if not c.gbi:
        return "vacuous", ""
    return _verdict(c.pblr1 == _pblr1_inclusions(c.lattice))


def _meet_distribution(lat) -> bool:
    n = len(lat)
    meet, s, rimp, limp = lat.meet_table, lat.sum_table, lat.rimp_table, lat.limp_table
    for i in range(n):
        for j in range(n):
            if not (rimp[meet[i, j], :] == s[rimp[i, :], rimp[j, :]]).all():
                return False
            if not (limp[meet[i, j], :] == s[limp[i, :], limp[j, :]]).all():
                return False
    return True


def _join_distribution(lat) -> bool:
    n = len(lat)
    s, rimp, limp = lat.sum_table, lat.rimp_table, lat.limp_table
    for i in range(n):
        for j in range(n):
            if not (rimp[i, s[j, :]] == s[rimp[i, j], rimp[i, :]]).all():
                return False
            if not (limp[i, s[j, :]] == s[limp[i, j], limp[i, :]]).all():
                return False
    return True


def p_p3_4_2(c: RingCtx):
    if not c.gbi:
        return "vacuous", ""
    return _verdict(c.pblr2 == _meet_distribution(c.lattice))


def p_p3_4_3(c: RingCtx):
    if not c.gbi:
        return "vacuous", ""
    return _verdict(c.pblr2 == _join_distribution(c.lattice))


def p_p3_5(c: RingCtx):
    return _verdict(c.multiplication == c.pblr1)


def p_p3_6(c: RingCtx):
    alg_ok = algebras.passes(algebras.check_pseudo_bl(c.algebra))
    return _verdict(c.pseudo_bl == (alg_ok and c.gbi))


MATRIX_BASE_BOUND = 4   # M_2 instances beyond order-4 bases exceed desk scale


def _matrix_ctx(c: RingCtx) -> RingCtx | None:
    if c.ring.order > MATRIX_BASE_BOUND:
        return None
    return RingCtx(CorpusEntry(f"M2({c.name})", matrix_ring(c.ring, 2)))


def p_l3_8(c: RingCtx):
    if not c.multiplication:
        return "vacuous", ""
    mc = _matrix_ctx(c)
    if mc is None:
        return "vacuous", ""
    return _verdict(mc.multiplication)


def p_l3_9(c: RingCtx):
    if not c.multiplication:
        return "vacuous", ""
    mc = _matrix_ctx(c)
    if mc is None:
        return "vacuous", ""
    return _verdict(mc.pblr1)


def p_l3_10(c: RingCtx):
    mc = _matrix_ctx(c)
    if mc is None:
        return "vacuous", ""
    lat, mlat = c.lattice, mc.lattice
    if len(lat) != len(mlat):
        return "fail", f"lattice sizes differ: {len(lat)} vs {len(mlat)}"
    mapped = [mlat.pos(matrix_ideal(i, 2, mc.ring)) for i in lat]
    perm = np.array(mapped)
    for name in ("sum_table", "meet_table", "product_table", "rimp_table", "limp_table"):
        base = getattr(lat, name)
        mat = getattr(mlat, name)
        if not (perm[base] == mat[perm[:, None], perm[None, :]]).all():
            return "fail", f"{name} not preserved by entrywise transport"
    return "pass", ""


def p_ex3_11(c: RingCtx):
    if not c.multiplication:
        return "vacuous", ""
    mc = _matrix_ctx(c)
    if mc is None:
        return "vacuous", ""
    return _verdict(mc.pseudo_bl)


QUOTIENT_ID_BOUND = 16  # order bound for the quotient-identity sweeps


def p_l3_12(c: RingCtx):
    if c.ring.order > QUOTIENT_ID_BOUND:
        return "vacuous", ""
    lat = c.lattice
    for pos, qctx in c.quotients:
        qlat = qctx.lattice
        if pos == lat.bottom:
            continue
        _, proj = quotient(c.ring, lat[pos])
        above = [j for j in range(len(lat)) if lat.leq[pos, j]]

        def q_pos(j):
            return qlat.pos(Ideal(qctx.ring, {int(proj[x]) for x in lat[j].members}))

        for j in above:
            jq = q_pos(j)
            if int(qlat.ann_star_vec[jq]) != q_pos(int(lat.rimp_table[j, pos])):
                return "fail", f"(J/I)* != (J->I)/I at I={pos}, J={j}"
            if int(qlat.ann_minus_vec[jq]) != q_pos(int(lat.limp_table[j, pos])):
                return "fail", f"(J/I)- != (J~>I)/I at I={pos}, J={j}"
            for k in above:
                kq = q_pos(k)
                if int(qlat.rimp_table[jq, kq]) != q_pos(int(lat.rimp_table[j, k])):
                    return "fail", f"residual transport fails at I={pos}, J={j}, K={k}"
                if int(qlat.limp_table[jq, kq]) != q_pos(int(lat.limp_table[j, k])):
                    return "fail", f"residual transport fails at I={pos}, J={j}, K={k}"
    return "pass", ""


def p_p3_13(c: RingCtx):
    if not c.pblr2:
        return "vacuous", ""
    return _verdict(c.pblr3)


def _all_quotients_pblr3(c: RingCtx) -> bool:
    return all(q.pblr3 for _, q in c.quotients)


def p_p3_14(c: RingCtx):
    return _verdict(c.pblr2 == _all_quotients_pblr3(c))


def p_p3_15(c: RingCtx):
    if not c.multiplication:
        return "vacuous", ""
    bad = [pos for pos, q in c.quotients if not q.multiplication]
    return _verdict(not bad, f"quotient by ideal {bad[:1]} not a multiplication ring" if bad else "")


def p_p3_16(c: RingCtx):
    if not (c.multiplication and _all_quotients_pblr3(c)):
        return "vacuous", ""
    return _verdict(c.pblr3)


def p_c3_16a(c: RingCtx):
    if not c.multiplication:
        return "vacuous", ""
    ok = (not c.pblr2 or c.pblr3) and (not _all_quotients_pblr3(c) or c.pblr2)
    return _verdict(ok)


def p_c3_17(c: RingCtx):
    if not c.pseudo_bl:
        return "vacuous", ""
    bad = [pos for pos, q in c.quotients if not q.pseudo_bl]
    return _verdict(not bad, f"quotient by ideal {bad[:1]} not pseudo BL" if bad else "")


def p_p3_18(c: RingCtx):
    if not c.pseudo_bl:
        return "vacuous", ""
    ok, w = classify.check_prime_maximal(c.ring, c.lattice)
    return _verdict(ok, w)


def _subring(ring: FiniteRing, members) -> FiniteRing:
    elems = sorted(members)
    back = {x: i for i, x in enumerate(elems)}
    idx = np.array(elems)
    add = np.array([[back[int(ring.add[a, b])] for b in idx] for a in idx], dtype=np.int32)
    mul = np.array([[back[int(ring.mul[a, b])] for b in idx] for a in idx], dtype=np.int32)
    return FiniteRing(add, mul, back[ring.zero], provenance="subring")


def p_p3_19(c: RingCtx):
    if not c.pseudo_bl:
        return "vacuous", ""
    lat = c.lattice
    hit = False
    for pos in range(len(lat)):
        star = int(lat.ann_star_vec[pos])
        minus = int(lat.ann_minus_vec[pos])
        if (int(lat.meet_table[pos, star]) != lat.bottom
                or int(lat.meet_table[pos, minus]) != lat.bottom):
            continue
        hit = True
        sub = RingCtx(CorpusEntry(f"{c.name}|ideal{pos}", _subring(c.ring, lat[pos].members)))
        if not sub.pseudo_bl:
            return "fail", f"ideal {pos} as a ring is not pseudo BL"
    return ("pass", "") if hit else ("vacuous", "")


def p_p3_20(c: RingCtx):
    # finite products / direct sums: factor verdicts transfer to the product
    if c.entry.factors is None:
        return "vacuous", ""
    facts = [RingCtx(CorpusEntry(f"{c.name}[{t}]", r))
             for t, r in enumerate(c.entry.factors)]
    if not all(f.pseudo_bl for f in facts):
        return "vacuous", ""
    return _verdict(c.pseudo_bl)


def p_l3_22(c: RingCtx):
    lat = c.lattice
    star, minus = lat.ann_star_vec, lat.ann_minus_vec
    disjoint = lat.meet_table == lat.bottom
    ok = (~disjoint | (lat.leq[np.arange(len(lat))[:, None], star[None, :]]
                       & lat.leq[np.arange(len(lat))[:, None], minus[None, :]]))
    return _verdict(ok.all())


def p_p3_23(c: RingCtx):
    red, _ = c.ring.is_reduced()
    if not (red and c.ring.one is not None):
        return "vacuous", ""
    baer, _ = classify.is_baer(c.ring, c.lattice)
    return _verdict(c.pblr3 == baer)


def _element_star_idempotents(c: RingCtx):
    """Canonical (least-index) idempotents generating each element's
    principal-ideal annihilators; None when some annihilator is not an
    idempotent orbit (then the ring is not Baer anyway)."""
    from blrings.ideals import ann_minus, ann_star, ideal_generated

    ring = c.ring
    idems = ring.idempotents()
    right = {e: frozenset(int(v) for v in ring.mul[e, :]) for e in idems}
    left = {e: frozenset(int(v) for v in ring.mul[:, e]) for e in idems}
    star_map, minus_map = {}, {}
    for a in range(ring.order):
        pa = ideal_generated(ring, [a])
        s = ann_star(pa).members
        m = ann_minus(pa).members
        e = next((e for e in idems if right[e] == s), None)
        e2 = next((e for e in idems if left[e] == m), None)
        if e is None or e2 is None:
            return None
        star_map[a] = e
        minus_map[a] = e2
    return star_map, minus_map


def p_p3_24(c: RingCtx):
    baer, _ = classify.is_baer(c.ring, c.lattice)
    if not baer:
        return "vacuous", ""
    maps = _element_star_idempotents(c)
    if maps is None:
        return "vacuous", ""
    star_map, minus_map = maps
    ring, lat = c.ring, c.lattice

    def is_baer_ideal(pos) -> bool:
        mem = lat[pos].bools
        neg = ring.neg
        for a in range(ring.order):
            for b in range(ring.order):
                if not mem[ring.add[a, neg[b]]]:
                    continue
                if not mem[ring.add[star_map[a], neg[star_map[b]]]]:
                    return False
                if not mem[ring.add[minus_map[a], neg[minus_map[b]]]]:
                    return False
        return True

    baer_pos = [p for p in range(len(lat)) if is_baer_ideal(p)]
    s, rimp, limp = lat.sum_table, lat.rimp_table, lat.limp_table
    for i in baer_pos:
        for j in baer_pos:
            if int(s[rimp[i, j], rimp[j, i]]) != lat.top:
                return "fail", f"(I->J)+(J->I) != R for Baer ideals {i},{j}"
            if int(s[limp[i, j], limp[j, i]]) != lat.top:
                return "fail", f"(I~>J)+(J~>I) != R for Baer ideals {i},{j}"
    return "pass", ""


def p_p3_25(c: RingCtx):
    baer, _ = classify.is_baer(c.ring, c.lattice)
    if not baer:
        return "vacuous", ""
    for pos, q in c.quotients:
        qbaer, _ = classify.is_baer(q.ring, q.lattice)
        if not (q.multiplication and qbaer):
            return "fail", f"quotient by ideal {pos} is not a multiplication Baer ring"
    return "pass", ""


def p_l3_26(c: RingCtx):
    if c.ring.one is None:
        return "vacuous", ""
    if not classify.is_von_neumann(c.ring, c.lattice):
        return "vacuous", ""
    return _verdict(c.multiplication)


def p_p3_27(c: RingCtx):
    if c.ring.one is None:
        return "vacuous", ""
    if not classify.is_von_neumann(c.ring, c.lattice):
        return "vacuous", ""
    lat = c.lattice
    primes = prime_positions(lat)
    cond = True
    for p in primes:
        for i in range(len(lat)):
            if not lat.leq[i, p]:
                continue
            for j in range(len(lat)):
                if not lat.leq[j, p]:
                    continue
                if int(lat.sum_table[lat.rimp_table[i, j], p]) != lat.top:
                    cond = False
    return _verdict(c.pseudo_bl == cond)


def p_l4_4(c: RingCtx):
    if not c.gbi or not prime_positions(c.lattice):
        return "vacuous", ""
    ok, note = classify.check_lemma_4_4(c.ring, c.lattice)
    return _verdict(ok, note)


def p_p4_7_1(c: RingCtx):
    si, heart = classify.is_subdirectly_irreducible(c.ring, c.lattice)
    if not (si and c.pseudo_bl):
        return "vacuous", ""
    from blrings.ideals import is_annihilator_ideal

    ok, _ = is_annihilator_ideal(c.lattice[heart], c.lattice)
    return _verdict(ok, f"heart ideal {heart} is not an annihilator ideal" if not ok else "")


def p_p4_7_2(c: RingCtx):
    si, _ = classify.is_subdirectly_irreducible(c.ring, c.lattice)
    if not (si and c.pseudo_bl):
        return "vacuous", ""
    checks = classify.check_theorem_4_8_factor(c.ring, c.lattice)
    return _verdict(checks["an-star-chain"] and checks["an-minus-chain"])


def _factor_checks(c: RingCtx):
    out = []
    for f in c.decomposition.factors:
        out.append(classify.check_theorem_4_8_factor(f.ring, all_ideals(f.ring)))
    return out


def p_t4_8_2(c: RingCtx):
    if not c.pseudo_bl:
        return "vacuous", ""
    d = c.decomposition
    if not (d.kernels_intersect_to_zero and d.factors_subdirectly_irreducible
            and d.factors_pseudo_bl):
        return "fail", "subdirect decomposition itself is unsound"
    bad = [f.kernel_pos for f, ch in zip(d.factors, _factor_checks(c))
           if not ch["annihilator-or-dense"]]
    return _verdict(not bad, f"factor at kernel {bad[:1]} has an ideal neither annihilator nor dense" if bad else "")


def p_t4_8_4(c: RingCtx):
    if not c.pseudo_bl:
        return "vacuous", ""
    bad = [f.kernel_pos for f, ch in zip(c.decomposition.factors, _factor_checks(c))
           if not (ch["unique-atom"] and ch["heart-annihilator"])]
    return _verdict(not bad)


def p_t4_8_ordering(c: RingCtx):
    if not c.pseudo_bl:
        return "vacuous", ""
    bad = [f.kernel_pos for f, ch in zip(c.decomposition.factors, _factor_checks(c))
           if not (ch["an-star-chain"] and ch["an-minus-chain"])]
    return _verdict(not bad)


def p_c4_9_1(c: RingCtx):
    si, _ = classify.is_subdirectly_irreducible(c.ring, c.lattice)
    if not (si and c.pseudo_bl):
        return "vacuous", ""
    return _verdict(classify.check_theorem_4_8_factor(c.ring, c.lattice)["residual-collapse"])


def p_c4_9_2(c: RingCtx):
    si, _ = classify.is_subdirectly_irreducible(c.ring, c.lattice)
    if not (si and c.pseudo_bl):
        return "vacuous", ""
    return _verdict(classify.check_theorem_4_8_factor(c.ring, c.lattice)["residual-density"])


@dataclass
class CatalogEntry:
    id: str
    description: str
    tag: str                     # theorem | informational
    fn: object


CATALOG: list[CatalogEntry] = [
    CatalogEntry("L3.2", "residuals absorb intersections and sums", "theorem", p_l3_2),
    CatalogEntry("L3.3", "residual products sit inside the intersection", "theorem", p_l3_3),
    CatalogEntry("P3.4-1", "divisibility reduces to two inclusions", "theorem", p_p3_4_1),
    CatalogEntry("P3.4-2", "prelinearity iff meet-distribution of residuals", "theorem", p_p3_4_2),
    CatalogEntry("P3.4-3", "prelinearity iff join-distribution of residuals", "theorem", p_p3_4_3),
    CatalogEntry("P3.5", "divisibility iff multiplication ring", "theorem", p_p3_5),
    CatalogEntry("P3.6", "classifier verdict iff ideal algebra passes", "theorem", p_p3_6),
    CatalogEntry("L3.8", "2x2 matrices over a multiplication ring", "theorem", p_l3_8),
    CatalogEntry("L3.9", "matrix instance keeps divisibility", "theorem", p_l3_9),
    CatalogEntry("L3.10", "entrywise ideal transport preserves all operations", "theorem", p_l3_10),
    CatalogEntry("Ex3.11", "matrix rings over multiplication rings are pseudo BL", "theorem", p_ex3_11),
    CatalogEntry("L3.12", "quotient annihilator and residual identities", "theorem", p_l3_12),
    CatalogEntry("P3.13", "prelinearity forces the orthogonality axiom", "theorem", p_p3_13),
    CatalogEntry("P3.14", "prelinearity iff orthogonality in every quotient", "theorem", p_p3_14),
    CatalogEntry("P3.15", "quotients of multiplication rings", "theorem", p_p3_15),
    CatalogEntry("P3.16", "multiplication + quotient orthogonality lifts", "theorem", p_p3_16),
    CatalogEntry("C3.16a", "multiplication rings: prelinearity vs orthogonality", "theorem", p_c3_16a),
    CatalogEntry("C3.17", "quotients of pseudo BL-rings are pseudo BL", "theorem", p_c3_17),
    CatalogEntry("P3.18", "prime ideals are maximal", "theorem", p_p3_18),
    CatalogEntry("P3.19", "ideals with trivial annihilator intersections are pseudo BL rings", "theorem", p_p3_19),
    CatalogEntry("P3.20", "closure under finite products and sums", "theorem", p_p3_20),
    CatalogEntry("L3.22", "disjoint ideals annihilate each other", "theorem", p_l3_22),
    CatalogEntry("P3.23", "reduced unital: orthogonality iff Baer", "theorem", p_p3_23),
    CatalogEntry("P3.24", "Baer-ideal pairs satisfy the residual sums", "theorem", p_p3_24),
    CatalogEntry("P3.25", "quotients of Baer rings by Baer ideals", "theorem", p_p3_25),
    CatalogEntry("L3.26", "Von Neumann rings are multiplication rings", "theorem", p_l3_26),
    CatalogEntry("P3.27", "Von Neumann pseudo BL criterion (ambiguous statement)", "informational", p_p3_27),
    # Informational, not theorem: the statement is false for noncommutative
    # rings.  In the 2x2 matrices over Z2, E11.E22 = 0 with E22 outside the
    # only prime ideal {0}, so every singular matrix lies in N*({0}) and the
    # intersection over primes is far from {0}.  The failure reproduces a
    # statement itself failing, not an implementation bug.
    CatalogEntry("L4.4", "killed-outside-a-prime sets intersect to zero "
                 "(fails on noncommutative instances)", "informational", p_l4_4),
    CatalogEntry("P4.7-1", "the heart is an annihilator ideal", "theorem", p_p4_7_1),
    CatalogEntry("P4.7-2", "annihilator ideals form a finite chain", "theorem", p_p4_7_2),
    CatalogEntry("T4.8-2", "factor ideals are annihilator or dense", "theorem", p_t4_8_2),
    CatalogEntry("T4.8-4", "factor algebras have a unique atom", "theorem", p_t4_8_4),
    CatalogEntry("T4.8-ordering", "factor annihilator ideals are chains", "theorem", p_t4_8_ordering),
    CatalogEntry("C4.9-1", "dense-over-annihilator residuals collapse", "theorem", p_c4_9_1),
    CatalogEntry("C4.9-2", "one residual direction is always dense", "theorem", p_c4_9_2),
]

CATALOG_IDS = [e.id for e in CATALOG]

# converse-direction probes for find_counterexample; these are searches,
# not theorems, so any outcome is informative
PROBES = {
    "pblr1-implies-pblr2": lambda c: ("vacuous", "") if not c.pblr1 else _verdict(c.pblr2),
    "pblr2-implies-pblr1": lambda c: ("vacuous", "") if not c.pblr2 else _verdict(c.pblr1),
    "baer-implies-reduced": lambda c: (
        ("vacuous", "") if not classify.is_baer(c.ring, c.lattice)[0]
        else _verdict(c.ring.is_reduced()[0])),
    "reduced-implies-baer": lambda c: (
        ("vacuous", "") if not c.ring.is_reduced()[0]
        else _verdict(classify.is_baer(c.ring, c.lattice)[0])),
}


# ---------------------------------------------------------------------------
# corpus

PRODUCT_POOL = ["zmod(2)", "zmod(3)", "zmod(4)", "zmod(6)", "zmod(8)",
                "zmod(9)", "Z2[x]/(x^2)"]


def _named_base_rings() -> list[CorpusEntry]:
    out = [CorpusEntry(f"zmod({n})", zmod(n)) for n in range(1, 25)]
    out.append(CorpusEntry("Z2[x]/(x^2)", poly_local_ring(2, 0, 0, "Z2[x]/(x^2)")))
    out.append(CorpusEntry("Z4[x]/(x^2-2)", poly_local_ring(4, 2, 0, "Z4[x]/(x^2-2)")))
    for p in (2, 3, 4):
        out.append(CorpusEntry(f"matrix(zmod({p}),2)", matrix_ring(zmod(p), 2)))
    by_name = {e.name: e.ring for e in out}
    pool = [(n, by_name[n]) for n in PRODUCT_POOL]
    for a in range(len(pool)):
        for b in range(a, len(pool)):
            (na, ra), (nb, rb) = pool[a], pool[b]
            if ra.order * rb.order > 4096:
                continue
            ring, _ = direct_product([ra, rb])
            out.append(CorpusEntry(f"product({na},{nb})", ring, factors=[ra, rb]))
    return out


def default_corpus(include_quotients: bool = True) -> list[CorpusEntry]:
    """Constructor-based corpus: modular rings, two table-given local
    rings, 2x2 matrix instances, pairwise products, and (optionally) all
    quotients of each base ring.  Duplicate tables are dropped, keeping
    the first name."""
    entries = _named_base_rings()
    if include_quotients:
        for e in list(entries):
            lattice = all_ideals(e.ring)
            for pos in range(len(lattice)):
                if pos == lattice.bottom:
                    continue
                q, _ = quotient(e.ring, lattice[pos])
                entries.append(CorpusEntry(f"{e.name}/{sorted(lattice[pos].members)}", q))
    seen: set = set()
    unique = []
    for e in entries:
        key = hash(e.ring)
        if key in seen:
            continue
        seen.add(key)
        unique.append(e)
    return unique


def get_corpus(name: str = "default") -> list[CorpusEntry]:
    if name == "default":
        return default_corpus()
    if name == "base":
        return default_corpus(include_quotients=False)
    if name == "none":
        return []
    raise ValueError(f"unknown corpus {name!r} (choose default, base or none)")


# ---------------------------------------------------------------------------

def _ring_records(centry: CorpusEntry, only: list[str] | None,
                  budget: float) -> list[PropertyRecord]:
    entries = CATALOG if only is None else [e for e in CATALOG if e.id in only]
    ctx = RingCtx(centry)
    start = time.monotonic()
    over = False
    records: list[PropertyRecord] = []
    for prop in sorted(entries, key=lambda e: e.id):
        if over or time.monotonic() - start > budget:
            over = True
            records.append(PropertyRecord(centry.name, prop.id, "skipped-too-large"))
            continue
        outcome, witness = prop.fn(ctx)
        records.append(PropertyRecord(centry.name, prop.id, outcome, witness))
    return records


def run_catalog(corpus: list[CorpusEntry], only: list[str] | None = None,
                budget: float = DEFAULT_BUDGET, jobs: int = 1) -> list[PropertyRecord]:
    """Evaluate every catalog entry on every corpus ring.

    Output order is deterministic regardless of ``jobs``: corpus order,
    then property id.  Rings running over the per-ring time budget have
    their remaining entries marked skipped-too-large, never silently
    dropped.
    """
    if only is not None:
        unknown = set(only) - {e.id for e in CATALOG}
        if unknown:
            raise ValueError(f"unknown property ids: {sorted(unknown)}")
    if jobs > 1 and len(corpus) > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            chunks = pool.starmap(
                _ring_records, [(centry, only, budget) for centry in corpus])
    else:
        chunks = [_ring_records(centry, only, budget) for centry in corpus]
    return [rec for chunk in chunks for rec in chunk]


def theorem_failures(records: list[PropertyRecord]) -> list[PropertyRecord]:
    tags = {e.id: e.tag for e in CATALOG}
    return [r for r in records
            if r.outcome == "fail" and tags.get(r.prop) == "theorem"]


def find_counterexample(prop_id: str, corpus: list[CorpusEntry],
                        budget: float = DEFAULT_BUDGET):
    """First corpus ring (canonical order) where the property fails."""
    if prop_id in PROBES:
        fn = PROBES[prop_id]
    else:
        matches = [e for e in CATALOG if e.id == prop_id]
        if not matches:
            raise ValueError(f"unknown property id {prop_id!r}")
        fn = matches[0].fn
    for centry in corpus:
        ctx = RingCtx(centry)
        outcome, witness = fn(ctx)
        if outcome == "fail":
            return PropertyRecord(centry.name, prop_id, outcome, witness)
    return None
