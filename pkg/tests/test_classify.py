import pytest

from blrings import classify
from blrings.classify import (
    NonUnitalError,
    PREDICATE_NAMES,
    check_lemma_4_4,
    check_pblr1,
    check_pblr2,
    check_pblr3,
    check_prime_maximal,
    check_theorem_4_8_factor,
    classify_ring,
    is_baer,
    is_multiplication_ring,
    is_special_primary,
    is_subdirectly_irreducible,
    is_von_neumann,
    n_minus,
    n_star,
    subdirect_decomposition,
)
from blrings.construct import matrix_ring, poly_local_ring, zmod
from blrings.ideals import all_ideals, ideal_generated
from blrings.rings import FiniteRing


def lat(ring):
    return all_ideals(ring)


def test_classify_zmod6():
    rep = classify_ring(zmod(6))
    expect = {
        "generated-by-idempotents": True,
        "multiplication-ring": True,
        "pblr1": True, "pblr2": True, "pblr3": True,
        "pseudo-bl-ring": True, "bl-ring": True, "lukasiewicz-ring": True,
        "reduced": True, "baer": True, "von-neumann": True,
        "prime-ring": False, "subdirectly-irreducible": False,
        "special-primary": False, "degenerate": False,
    }
    for name, verdict in expect.items():
        assert rep.verdict(name) == verdict, name


def test_classify_zmod4():
    rep = classify_ring(zmod(4))
    assert rep.verdict("pseudo-bl-ring")
    assert rep.verdict("lukasiewicz-ring")
    assert not rep.verdict("reduced")
    assert not rep.verdict("baer")
    assert rep.verdict("subdirectly-irreducible")
    assert rep["subdirectly-irreducible"].witness == [0, 2]  # the heart
    assert rep.verdict("special-primary")
    assert rep.verdict("von-neumann")


def test_classify_covers_all_names():
    rep = classify_ring(zmod(2))
    assert set(rep.results) == set(PREDICATE_NAMES)


def test_classify_matrix_ring_zmod2():
    ring = matrix_ring(zmod(2), 2)
    rep = classify_ring(ring)
    assert rep.verdict("multiplication-ring")
    assert rep.verdict("pseudo-bl-ring")
    assert rep.verdict("prime-ring")
    # simple but not a division ring, so not Von Neumann under the
    # quotient-by-primes definition
    assert not rep.verdict("von-neumann")
    assert not rep.verdict("reduced")


def test_special_primary():
    assert is_special_primary(zmod(8), lat(zmod(8)))[0]
    assert is_special_primary(zmod(9), lat(zmod(9)))[0]
    ok, witness = is_special_primary(zmod(6), lat(zmod(6)))
    assert not ok and len(witness["maximal_ideals"]) == 2


def test_pblr_checks_on_null_square_ring():
    # order-4 ring with x*y = 0 everywhere: the lattice is the subgroup
    # chain of Z4 and every residual is the whole ring, so prelinearity
    # and orthogonality hold trivially while divisibility fails
    # (nontrivial products collapse to {0})
    z4 = zmod(4)
    null4 = FiniteRing(z4.add, z4.mul * 0)
    l4 = lat(null4)
    assert len(l4) == 3
    ok1, w1 = check_pblr1(null4, l4)
    assert not ok1 and w1 is not None
    assert check_pblr2(null4, l4)[0]
    assert check_pblr3(null4, l4)[0]
    mult, _ = is_multiplication_ring(null4, l4)
    assert not mult


def test_von_neumann_requires_unit():
    null2 = FiniteRing([[0, 1], [1, 0]], [[0, 0], [0, 0]])
    with pytest.raises(NonUnitalError):
        is_von_neumann(null2, lat(null2))
    rep = classify_ring(null2)
    assert not rep.verdict("von-neumann")
    assert "unit" in rep["von-neumann"].note


def test_baer():
    assert is_baer(zmod(6), lat(zmod(6)))[0]
    ok, witness = is_baer(zmod(4), lat(zmod(4)))
    assert not ok and "ideal" in witness
    # zero ring: trivially Baer
    assert is_baer(zmod(1), lat(zmod(1)))[0]


def test_subdirectly_irreducible():
    ok, heart = is_subdirectly_irreducible(zmod(4), lat(zmod(4)))
    assert ok and lat(zmod(4))[heart].members == {0, 2}
    assert not is_subdirectly_irreducible(zmod(6), lat(zmod(6)))[0]
    assert not is_subdirectly_irreducible(zmod(1), lat(zmod(1)))[0]


def test_n_star_zmod6():
    r = zmod(6)
    l6 = lat(r)
    two = next(i for i in l6 if i.members == {0, 2, 4})
    three = next(i for i in l6 if i.members == {0, 3})
    assert n_star(r, two, l6) == {0, 2, 4}
    assert n_star(r, three, l6) == {0, 3}
    assert n_minus(r, two, l6) == {0, 2, 4}
    with pytest.raises(ValueError):
        n_star(r, next(i for i in l6 if i.members == {0}), l6)


def test_lemma_4_4_commutative_cases():
    for n in (4, 6, 12):
        ok, _ = check_lemma_4_4(zmod(n), lat(zmod(n)))
        assert ok
    # no primes: the zero ring is vacuous
    ok, note = check_lemma_4_4(zmod(1), lat(zmod(1)))
    assert ok and "no prime" in note


def test_lemma_4_4_fails_on_matrix_ring():
    # the statement is false here: in the 2x2 matrices over Z2 the only prime
    # ideal is {0} and every singular matrix is killed by some nonzero
    # element, so the intersection is not {0}
    ring = matrix_ring(zmod(2), 2)
    ok, _ = check_lemma_4_4(ring, lat(ring))
    assert not ok


def test_decomposition_zmod4():
    r = zmod(4)
    d = subdirect_decomposition(r, lat(r))
    assert d.kernels_intersect_to_zero
    assert d.factors_subdirectly_irreducible and d.factors_pseudo_bl
    by_kernel = {frozenset(lat(r)[f.kernel_pos].members): f for f in d.factors}
    assert set(by_kernel) == {frozenset({0}), frozenset({0, 2})}
    assert by_kernel[frozenset({0})].ring.order == 4
    assert by_kernel[frozenset({0})].elements == [2]
    assert by_kernel[frozenset({0, 2})].ring.order == 2
    assert by_kernel[frozenset({0, 2})].elements == [1, 3]


def test_decomposition_zmod6_tie_break():
    r = zmod(6)
    l6 = lat(r)
    d = subdirect_decomposition(r, l6)
    # units exclude both maximal ideals; the canonical (smaller) one wins
    assert l6[d.kernel_of[1]].members == {0, 3}
    assert l6[d.kernel_of[5]].members == {0, 3}
    assert {len(l6[p]) for x, p in d.kernel_of.items()} == {2, 3}
    assert sorted(f.ring.order for f in d.factors) == [2, 3]
    assert d.kernels_intersect_to_zero
    # both maximal excluders are reported for the tied elements
    assert len(d.maximal_excluders[1]) == 2


def test_theorem_4_8_checks_pass_on_chain_factors():
    for n in (2, 3, 4, 8, 9):
        checks = check_theorem_4_8_factor(zmod(n), lat(zmod(n)))
        assert all(checks.values()), (n, checks)
    assert set(checks) == {
        "annihilator-or-dense", "unique-atom", "an-star-chain",
        "an-minus-chain", "heart-annihilator", "residual-collapse",
        "residual-density"}


def test_theorem_4_8_checks_flag_non_irreducible_ring():
    checks = check_theorem_4_8_factor(zmod(6), lat(zmod(6)))
    assert not checks["unique-atom"]


def test_prime_maximal():
    assert check_prime_maximal(zmod(12), lat(zmod(12)))[0]
    assert check_prime_maximal(zmod(1), lat(zmod(1)))[0]


def test_non_pseudo_bl_input_noted_in_decomposition():
    r = poly_local_ring(2, 0, 0, "dual-numbers-over-z2")
    d = subdirect_decomposition(r, lat(r))
    assert d.note == "" or "not a pseudo BL-ring" in d.note
