"""Command-line front end.

Exit codes: 0 success (negative verdicts included), 2 spec parse error,
3 construction error, 4 size bound exceeded, 5 internal invariant or
theorem-property failure.
"""

from __future__ import annotations

import json
import sys

import click

from blrings import algebras, catalog, classify
from blrings.construct import (
    ConstructionError,
    SizeBoundError,
    SpecParseError,
    parse_spec,
)
from blrings.ideals import all_ideals, ideal_generated
from blrings.kernels import BACKEND
from blrings.rings import FiniteRing, RingValidationError

SCHEMA = "blrings-report-v1"

EXIT_PARSE = 2
EXIT_CONSTRUCTION = 3
EXIT_BOUNDS = 4
EXIT_INVARIANT = 5


def render_json(payload: dict) -> str:
    """Canonical machine-readable rendering; re-rendering a parsed report
    reproduces the bytes."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _build_ring(spec: str, max_order: int) -> FiniteRing:
    try:
        ring = parse_spec(spec)
    except SpecParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    except SizeBoundError as exc:
        click.echo(f"size bound: {exc}", err=True)
        sys.exit(EXIT_BOUNDS)
    except (ConstructionError, RingValidationError) as exc:
        click.echo(f"construction error: {exc}", err=True)
        sys.exit(EXIT_CONSTRUCTION)
    if ring.order > max_order:
        click.echo(f"size bound: ring order {ring.order} exceeds --max-order {max_order}",
                   err=True)
        sys.exit(EXIT_BOUNDS)
    return ring


def _members(ideal) -> list[int]:
    return sorted(ideal.members)


def _generators(ring, members) -> list[int]:
    gens: list[int] = []
    current = {ring.zero}
    for x in sorted(members):
        if x not in current:
            gens.append(x)
            current = set(ideal_generated(ring, gens).members)
    return gens


@click.group()
@click.version_option(package_name="blrings")
def main():
    """Finite-ring ideal lattices as residuated structures."""


_spec_arg = click.argument("spec")
_fmt_opt = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                        default="text", show_default=True)
_max_order_opt = click.option("--max-order", type=int, default=4096, show_default=True,
                              help="reject constructed rings above this order")


@main.command()
@_spec_arg
@_fmt_opt
@_max_order_opt
def check(spec, fmt, max_order):
    """Classify a ring against every named predicate."""
    ring = _build_ring(spec, max_order)
    lattice = all_ideals(ring)
    try:
        report = classify.classify_ring(ring, lattice)
    except classify.InternalInvariantError as exc:
        click.echo(f"internal invariant violation: {exc}", err=True)
        sys.exit(EXIT_INVARIANT)
    payload = {
        "schema": SCHEMA,
        "command": "check",
        "spec": spec,
        "order": ring.order,
        "ideal_count": len(lattice),
        "predicates": {
            name: {
                "verdict": r.verdict,
                "witness": _jsonable(r.witness),
                "note": r.note,
            }
            for name, r in report.results.items()
        },
    }
    if fmt == "json":
        click.echo(render_json(payload), nl=False)
        return
    click.echo(f"ring {spec}: order {ring.order}, {len(lattice)} ideals")
    for name in classify.PREDICATE_NAMES:
        r = report.results[name]
        line = f"  {name}: {str(r.verdict).lower()}"
        if not r.verdict and r.witness is not None:
            line += f"  (witness: {r.witness})"
        if r.note:
            line += f"  [{r.note}]"
        click.echo(line)


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in sorted(obj) if True] if isinstance(obj, (set, frozenset)) \
            else [_jsonable(v) for v in obj]
    return str(obj)


def _label(members) -> str:
    return "{" + ",".join(str(x) for x in sorted(members)) + "}"


def hasse_dot(lattice) -> str:
    """Hasse diagram of ideal inclusion in DOT, deterministically ordered."""
    lines = ["digraph ideals {", "  rankdir=BT;", "  node [shape=box];"]
    for pos, ideal in enumerate(lattice.ideals):
        lines.append(f'  n{pos} [label="{_label(ideal.members)}"];')
    for a, b in sorted(lattice.covers()):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@main.command()
@_spec_arg
@click.option("--dot", is_flag=True, help="emit the Hasse diagram in DOT")
@_fmt_opt
@_max_order_opt
def ideals(spec, dot, fmt, max_order):
    """List all two-sided ideals with annihilators and density flags."""
    ring = _build_ring(spec, max_order)
    lattice = all_ideals(ring)
    if dot:
        click.echo(hasse_dot(lattice), nl=False)
        return
    star, minus = lattice.ann_star_vec, lattice.ann_minus_vec
    rows = []
    for pos, ideal in enumerate(lattice.ideals):
        rows.append({
            "index": pos,
            "members": _members(ideal),
            "generators": _generators(ring, ideal.members),
            "ann_star": int(star[pos]),
            "ann_minus": int(minus[pos]),
            "star_dense": bool(int(star[pos]) == lattice.bottom),
            "minus_dense": bool(int(minus[pos]) == lattice.bottom),
        })
    payload = {"schema": SCHEMA, "command": "ideals", "spec": spec,
               "order": ring.order, "ideals": rows}
    if fmt == "json":
        click.echo(render_json(payload), nl=False)
        return
    click.echo(f"ring {spec}: {len(lattice)} ideals (canonical order)")
    for row in rows:
        click.echo(
            f"  [{row['index']}] {_label(row['members'])} "
            f"gens={row['generators']} ann*={row['ann_star']} ann-={row['ann_minus']}"
            f"{' star-dense' if row['star_dense'] else ''}"
            f"{' minus-dense' if row['minus_dense'] else ''}")


@main.command()
@_spec_arg
@_fmt_opt
@_max_order_opt
def algebra(spec, fmt, max_order):
    """Axiom reports for the ideal algebra (failures are data, not errors)."""
    ring = _build_ring(spec, max_order)
    lattice = all_ideals(ring)
    alg = algebras.ideal_algebra(lattice)
    groups = {
        "pseudo_bl": algebras.check_pseudo_bl(alg),
        "bl": algebras.check_bl(alg),
        "pseudo_mv": algebras.check_pseudo_mv(alg),
    }
    parts = algebras.annihilator_parts(lattice)
    payload = {
        "schema": SCHEMA, "command": "algebra", "spec": spec,
        "size": alg.size,
        "axioms": {
            gname: [{"axiom": r.axiom, "holds": r.holds,
                     "witness": list(r.witness)} for r in reps]
            for gname, reps in groups.items()
        },
        "parts": parts,
        "mv_center": algebras.mv_center(alg),
    }
    if fmt == "json":
        click.echo(render_json(payload), nl=False)
        return
    click.echo(f"ideal algebra of {spec}: {alg.size} elements")
    for gname, reps in groups.items():
        verdict = "passes" if algebras.passes(reps) else "FAILS"
        click.echo(f"  {gname}: {verdict}")
        for r in reps:
            click.echo(f"    {r}")
    for key, val in parts.items():
        click.echo(f"  {key}: {val}")
    click.echo(f"  mv_center: {payload['mv_center']}")


@main.command()
@_spec_arg
@_fmt_opt
@_max_order_opt
def decompose(spec, fmt, max_order):
    """Subdirect decomposition with per-factor structural checks."""
    ring = _build_ring(spec, max_order)
    lattice = all_ideals(ring)
    result = classify.subdirect_decomposition(ring, lattice)
    factors = []
    for f in result.factors:
        flat = all_ideals(f.ring)
        checks = classify.check_theorem_4_8_factor(f.ring, flat)
        factors.append({
            "kernel": _members(lattice[f.kernel_pos]),
            "elements": sorted(f.elements),
            "order": f.ring.order,
            "checks": checks,
        })
    payload = {
        "schema": SCHEMA, "command": "decompose", "spec": spec,
        "kernels_intersect_to_zero": result.kernels_intersect_to_zero,
        "factors_subdirectly_irreducible": result.factors_subdirectly_irreducible,
        "factors_pseudo_bl": result.factors_pseudo_bl,
        "note": result.note,
        "factors": factors,
    }
    if fmt == "json":
        click.echo(render_json(payload), nl=False)
        return
    click.echo(f"subdirect decomposition of {spec}: {len(factors)} factors")
    if result.note:
        click.echo(f"  note: {result.note}")
    click.echo(f"  kernels intersect to zero: {result.kernels_intersect_to_zero}")
    for f in factors:
        click.echo(f"  factor order {f['order']} (kernel {_label(f['kernel'])}, "
                   f"elements {f['elements']})")
        for name, ok in f["checks"].items():
            click.echo(f"    {name}: {str(ok).lower()}")


@main.command()
@click.option("--corpus", default="default", show_default=True,
              help="corpus selection: default, base or none")
@click.option("--only", default=None, help="comma-separated property ids")
@click.option("--budget", type=float, default=catalog.DEFAULT_BUDGET,
              show_default=True, help="per-ring time budget in seconds")
@click.option("--jobs", type=int, default=1, show_default=True,
              help="parallel workers over corpus rings")
@_fmt_opt
def props(corpus, only, budget, jobs, fmt):
    """Run the statement catalog over the corpus; exit 5 on any
    theorem-tagged failure."""
    try:
        entries = catalog.get_corpus(corpus)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    only_ids = [s.strip() for s in only.split(",") if s.strip()] if only else None
    try:
        records = catalog.run_catalog(entries, only=only_ids, budget=budget, jobs=jobs)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    failures = catalog.theorem_failures(records)
    payload = {
        "schema": SCHEMA, "command": "props",
        "corpus": corpus, "rings": len(entries),
        "records": [r.as_dict() for r in records],
        "theorem_failures": [r.as_dict() for r in failures],
    }
    if fmt == "json":
        click.echo(render_json(payload), nl=False)
    else:
        counts: dict[str, int] = {}
        for r in records:
            counts[r.outcome] = counts.get(r.outcome, 0) + 1
        click.echo(f"catalog over {len(entries)} rings "
                   f"({len(records)} evaluations, backend {BACKEND})")
        for outcome in ("pass", "fail", "vacuous", "skipped-too-large"):
            click.echo(f"  {outcome}: {counts.get(outcome, 0)}")
        for r in records:
            if r.outcome == "fail":
                click.echo(f"  FAIL {r.prop} on {r.ring}: {r.witness}")
    if failures:
        click.echo(f"theorem failures: {len(failures)}", err=True)
        sys.exit(EXIT_INVARIANT)


if __name__ == "__main__":
    main()
