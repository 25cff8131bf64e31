"""Generic finite residuated structures and exhaustive axiom checkers.

A FiniteAlgebra is a carrier 0..size-1 with explicit meet/join/times and
two implication tables.  The algebra of a ring's ideal lattice is built
by ideal_algebra; the checkers work on any well-formed table set, so
hand-built chains (Godel, Lukasiewicz) can be probed too.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from blrings.ideals import IdealLattice


@dataclass(frozen=True)
class FiniteAlgebra:
    size: int
    meet: np.ndarray
    join: np.ndarray
    times: np.ndarray
    rimp: np.ndarray  # x -> y
    limp: np.ndarray  # x ~> y
    bottom: int
    top: int

    def le(self, x: int, y: int) -> bool:
        return int(self.meet[x, y]) == x

    @property
    def le_matrix(self) -> np.ndarray:
        return self.meet == np.arange(self.size)[:, None]


@dataclass
class AxiomReport:
    axiom: str
    holds: bool
    witness: tuple[int, ...] = field(default_factory=tuple)

    def __str__(self):
        if self.holds:
            return f"{self.axiom}: holds"
        return f"{self.axiom}: FAILS at {self.witness}"


def ideal_algebra(lattice: IdealLattice) -> FiniteAlgebra:
    """The residuated structure on the full ideal lattice.

    meet = intersection, join = sum, times = ideal product, the two
    implications are the two residuals; bottom = {0}, top = R.
    """
    return FiniteAlgebra(
        size=len(lattice),
        meet=lattice.meet_table,
        join=lattice.sum_table,
        times=lattice.product_table,
        rimp=lattice.rimp_table,
        limp=lattice.limp_table,
        bottom=lattice.bottom,
        top=lattice.top,
    )


def _first_bad(mask: np.ndarray) -> tuple[int, ...]:
    bad = np.argwhere(~mask)
    return tuple(int(v) for v in bad[0]) if len(bad) else ()


def _report(name: str, ok_mask: np.ndarray) -> AxiomReport:
    ok = bool(ok_mask.all())
    return AxiomReport(name, ok, () if ok else _first_bad(ok_mask))


def check_bounded_lattice(a: FiniteAlgebra) -> AxiomReport:
    m, j = a.meet, a.join
    n = a.size
    idx = np.arange(n)
    checks = [
        m == m.T,
        j == j.T,
        m[idx, idx] == idx,
        j[idx, idx] == idx,
        m[idx, a.bottom] == a.bottom,
        j[idx, a.top] == a.top,
        m[idx, a.top] == idx,
        j[idx, a.bottom] == idx,
        # absorption
        m[idx[:, None], j] == idx[:, None],
        j[idx[:, None], m] == idx[:, None],
        # order agreement between meet and join: meet[x,y]==x iff join[x,y]==y
        (m == idx[:, None]) == (j == idx[None, :]),
    ]
    # associativity of meet and join, sliced per x
    for t in (m, j):
        for x in range(n):
            if not np.array_equal(t[t[x]], t[x][t]):
                bad = np.argwhere(t[t[x]] != t[x][t])[0]
                return AxiomReport("bounded-lattice", False, (x, int(bad[0]), int(bad[1])))
    for c in checks:
        ok = bool(np.asarray(c).all())
        if not ok:
            return _report("bounded-lattice", np.asarray(c))
    return AxiomReport("bounded-lattice", True)


def check_monoid(a: FiniteAlgebra) -> AxiomReport:
    t = a.times
    n = a.size
    idx = np.arange(n)
    if not (t[idx, a.top] == idx).all():
        return _report("monoid", t[idx, a.top] == idx)
    if not (t[a.top, idx] == idx).all():
        return _report("monoid", t[a.top, idx] == idx)
    for x in range(n):
        if not np.array_equal(t[t[x]], t[x][t]):
            bad = np.argwhere(t[t[x]] != t[x][t])[0]
            return AxiomReport("monoid", False, (x, int(bad[0]), int(bad[1])))
    return AxiomReport("monoid", True)


def check_adjointness(a: FiniteAlgebra) -> AxiomReport:
    """x.y <= z iff x <= y->z iff y <= x~>z, exhaustively."""
    le = a.le_matrix
    n = a.size
    for x in range(n):
        # left[y, z] : times(x, y) <= z
        left = le[a.times[x], :]
        mid = le[x, a.rimp][:, :]            # x <= rimp(y, z)
        right = le[np.arange(n)[:, None], a.limp[x]]  # y <= limp(x, z)
        ok = (left == mid) & (left == right)
        if not ok.all():
            y, z = np.argwhere(~ok)[0]
            return AxiomReport("adjointness", False, (x, int(y), int(z)))
    return AxiomReport("adjointness", True)


def check_divisibility(a: FiniteAlgebra) -> AxiomReport:
    """x ^ y = (x->y).x = x.(x~>y)."""
    n = a.size
    idx = np.arange(n)
    lhs = a.meet
    r1 = a.times[a.rimp, idx[:, None]]   # times(rimp(x,y), x)
    r2 = a.times[idx[:, None], a.limp]   # times(x, limp(x,y))
    ok = (lhs == r1) & (lhs == r2)
    if not ok.all():
        x, y = np.argwhere(~ok)[0]
        return AxiomReport("divisibility", False, (int(x), int(y)))
    return AxiomReport("divisibility", True)


def check_prelinearity(a: FiniteAlgebra) -> AxiomReport:
    """(x->y) v (y->x) = (x~>y) v (y~>x) = top."""
    ok = (a.join[a.rimp, a.rimp.T] == a.top) & (a.join[a.limp, a.limp.T] == a.top)
    if not ok.all():
        x, y = np.argwhere(~ok)[0]
        return AxiomReport("prelinearity", False, (int(x), int(y)))
    return AxiomReport("prelinearity", True)


def check_pseudo_bl(a: FiniteAlgebra) -> list[AxiomReport]:
    """Axiom-group reports for the pseudo BL laws; all sweeps exhaustive."""
    return [
        check_bounded_lattice(a),
        check_monoid(a),
        check_adjointness(a),
        check_divisibility(a),
        check_prelinearity(a),
    ]


def check_bl(a: FiniteAlgebra) -> list[AxiomReport]:
    """Pseudo BL plus commutativity of times and coincidence of residuals."""
    reports = check_pseudo_bl(a)
    comm_ok = np.asarray(a.times == a.times.T)
    reports.append(_report("times-commutative", comm_ok))
    same_ok = np.asarray(a.rimp == a.limp)
    reports.append(_report("residuals-coincide", same_ok))
    return reports


def passes(reports: list[AxiomReport]) -> bool:
    return all(r.holds for r in reports)


def complements(a: FiniteAlgebra) -> tuple[np.ndarray, np.ndarray]:
    """x* = x->bottom and x- = x~>bottom."""
    return a.rimp[:, a.bottom].copy(), a.limp[:, a.bottom].copy()


def check_pseudo_mv(a: FiniteAlgebra) -> list[AxiomReport]:
    """The eight pseudo MV axioms with complements derived from residuals.

    y (+) x := (x* . y*)- (the defining clause appears twice in the source
    definition; it is one operation).
    """
    star, minus = complements(a)
    t = a.times
    n = a.size
    idx = np.arange(n)

    # full (+) table: o[a, b] = a (+) b = (b* . a*)-
    o = minus[t[star[None, :], star[:, None]]]
    reports = []
    # (1) associativity of times
    ok = True
    wit: tuple[int, ...] = ()
    for x in range(n):
        if not np.array_equal(t[t[x]], t[x][t]):
            bad = np.argwhere(t[t[x]] != t[x][t])[0]
            ok, wit = False, (x, int(bad[0]), int(bad[1]))
            break
    reports.append(AxiomReport("mv1-times-associative", ok, wit))
    reports.append(_report("mv2-top-unit",
                           (t[idx, a.top] == idx) & (t[a.top, idx] == idx)))
    reports.append(_report("mv3-bottom-absorbs",
                           (t[idx, a.bottom] == a.bottom) & (t[a.bottom, idx] == a.bottom)))
    reports.append(_report("mv4-complements-of-bottom", np.asarray(
        [star[a.bottom] == a.top, minus[a.bottom] == a.top])))
    reports.append(_report("mv5-complement-swap",
                           star[t[minus[:, None], minus[None, :]]]
                           == minus[t[star[:, None], star[None, :]]]))
    x_ = idx[:, None]
    y_ = idx[None, :]
    e1 = t[x_, o[minus[x_], y_]]          # x . (x- (+) y)
    e2 = t[y_, o[minus[y_], x_]]          # y . (y- (+) x)
    e3 = t[o[x_, star[y_]], y_]           # (x (+) y*) . y
    e4 = t[o[y_, star[x_]], x_]           # (y (+) x*) . x
    reports.append(_report("mv6-exchange", (e1 == e2) & (e1 == e3) & (e1 == e4)))
    lhs7 = o[x_, t[star[x_], y_]]         # x (+) (x* . y)
    rhs7 = o[t[x_, star[y_]], y_]         # (x . y*) (+) y
    reports.append(_report("mv7-alignment", lhs7 == rhs7))
    reports.append(_report("mv8-double-complement", minus[star] == idx))
    return reports


def double_negation_fixed(a: FiniteAlgebra) -> list[int]:
    """Elements with (x*)* = x."""
    star, _ = complements(a)
    return [int(x) for x in np.flatnonzero(star[star] == np.arange(a.size))]


def mv_center(a: FiniteAlgebra) -> list[int]:
    """MV(A) = {x* : x in A}; contained in the double-negation-fixed part."""
    star, _ = complements(a)
    center = sorted({int(x) for x in star})
    fixed = set(double_negation_fixed(a))
    assert set(center) <= fixed
    return center


def mv_center_closed(a: FiniteAlgebra) -> bool:
    """The MV-center is closed under times and rimp (closure only)."""
    center = set(mv_center(a))
    for x in center:
        for y in center:
            if int(a.times[x, y]) not in center or int(a.rimp[x, y]) not in center:
                return False
    return True


def annihilator_parts(lattice: IdealLattice) -> dict:
    """AN*, AN-, D*, D- as sorted lists of lattice positions."""
    star = lattice.ann_star_vec
    minus = lattice.ann_minus_vec
    return {
        "AN_star": sorted({int(p) for p in star}),
        "AN_minus": sorted({int(p) for p in minus}),
        "D_star": [int(p) for p in np.flatnonzero(star == lattice.bottom)],
        "D_minus": [int(p) for p in np.flatnonzero(minus == lattice.bottom)],
    }
