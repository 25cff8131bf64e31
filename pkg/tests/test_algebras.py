import numpy as np
import pytest

from blrings import algebras
from blrings.algebras import (
    FiniteAlgebra,
    annihilator_parts,
    check_bl,
    check_pseudo_bl,
    check_pseudo_mv,
    complements,
    double_negation_fixed,
    ideal_algebra,
    mv_center,
    mv_center_closed,
    passes,
)
from blrings.construct import matrix_ring, zmod
from blrings.ideals import all_ideals


def chain_algebra(n: int, times: str) -> FiniteAlgebra:
    """A bounded chain 0 < 1 < ... < n-1 with times = min ('godel') or the
    Lukasiewicz truncated product."""
    idx = np.arange(n)
    meet = np.minimum.outer(idx, idx).astype(np.int32)
    join = np.maximum.outer(idx, idx).astype(np.int32)
    if times == "godel":
        t = meet.copy()
        imp = np.where(idx[:, None] <= idx[None, :], n - 1, idx[None, :]).astype(np.int32)
    elif times == "lukasiewicz":
        t = np.maximum(idx[:, None] + idx[None, :] - (n - 1), 0).astype(np.int32)
        imp = np.minimum(n - 1 - idx[:, None] + idx[None, :], n - 1).astype(np.int32)
    else:
        raise ValueError(times)
    return FiniteAlgebra(size=n, meet=meet, join=join, times=t,
                         rimp=imp, limp=imp.copy(), bottom=0, top=n - 1)


def test_ideal_algebra_of_zmod4_is_three_element_mv_chain():
    alg = ideal_algebra(all_ideals(zmod(4)))
    assert alg.size == 3
    assert passes(check_pseudo_bl(alg))
    assert passes(check_bl(alg))
    assert passes(check_pseudo_mv(alg))
    # identical to the hand-built 3-element Lukasiewicz chain
    luk = chain_algebra(3, "lukasiewicz")
    for name in ("meet", "join", "times", "rimp", "limp"):
        assert np.array_equal(getattr(alg, name), getattr(luk, name))


def test_godel_chain_fails_double_complement_at_middle():
    alg = chain_algebra(3, "godel")
    assert passes(check_pseudo_bl(alg))
    reports = {r.axiom: r for r in check_pseudo_mv(alg)}
    bad = reports["mv8-double-complement"]
    assert not bad.holds
    assert 1 in bad.witness  # the middle element collapses to bottom twice


def test_lukasiewicz_chains_pass_all_mv_axioms():
    for n in (2, 3, 4, 5):
        alg = chain_algebra(n, "lukasiewicz")
        assert passes(check_pseudo_mv(alg))


def test_complements_and_double_negation():
    alg = chain_algebra(3, "godel")
    star, minus = complements(alg)
    assert list(star) == [2, 0, 0]
    assert list(minus) == [2, 0, 0]
    assert double_negation_fixed(alg) == [0, 2]


def test_mv_center():
    godel = chain_algebra(3, "godel")
    assert mv_center(godel) == [0, 2]
    assert mv_center_closed(godel)
    luk = chain_algebra(4, "lukasiewicz")
    assert mv_center(luk) == [0, 1, 2, 3]
    assert mv_center_closed(luk)


def test_bounded_lattice_failure_reports_witness():
    alg = chain_algebra(3, "godel")
    broken = FiniteAlgebra(size=3, meet=alg.meet, join=alg.meet,  # join wrong
                           times=alg.times, rimp=alg.rimp, limp=alg.limp,
                           bottom=0, top=2)
    rep = algebras.check_bounded_lattice(broken)
    assert not rep.holds and rep.witness


def test_adjointness_failure_detected():
    alg = chain_algebra(3, "lukasiewicz")
    rimp = alg.rimp.copy()
    rimp[2, 0] = 1  # 2 -> 0 must be 0
    broken = FiniteAlgebra(size=3, meet=alg.meet, join=alg.join, times=alg.times,
                           rimp=rimp, limp=alg.limp, bottom=0, top=2)
    assert not algebras.check_adjointness(broken).holds


def test_bl_extends_pseudo_bl_with_symmetry_checks():
    alg = ideal_algebra(all_ideals(zmod(6)))
    reports = {r.axiom for r in check_bl(alg)}
    assert {"times-commutative", "residuals-coincide"} <= reports
    assert passes(check_bl(alg))


def test_annihilator_parts_zmod6():
    lat = all_ideals(zmod(6))
    parts = annihilator_parts(lat)
    # canonical order: {0} < {0,3} < {0,2,4} < R; every ideal is an
    # annihilator and only the whole ring is dense
    assert parts["AN_star"] == [0, 1, 2, 3]
    assert parts["AN_minus"] == [0, 1, 2, 3]
    assert parts["D_star"] == [3]
    assert parts["D_minus"] == [3]


def test_annihilator_parts_zmod8_chain():
    lat = all_ideals(zmod(8))
    parts = annihilator_parts(lat)
    assert parts["AN_star"] == [0, 1, 2, 3]
    assert parts["D_star"] == [3]


def test_matrix_ring_ideal_algebra_passes_pseudo_bl():
    alg = ideal_algebra(all_ideals(matrix_ring(zmod(4), 2)))
    assert alg.size == 3
    assert passes(check_pseudo_bl(alg))
